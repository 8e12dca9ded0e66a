# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython kernel for sparse multivariate theta-block products.

Mirrors ``interlie._blockmul_py`` exactly: coefficients stay Python ints
(exactness first), but the u-loop, early truncation break and dict plumbing
run as compiled code with the factor deltas unpacked into C arrays.
"""

IMPLEMENTATION = "cython"


def merge_factor(list acc, list terms, Py_ssize_t max_u):
    cdef Py_ssize_t u, u2, t, nterms, nslots
    cdef long long du_c
    cdef list out = []
    cdef dict slot, target
    cdef object lp, c, key, prev, v, dlp, fc

    for u in range(max_u + 1):
        out.append({})

    nterms = len(terms)
    cdef long long[::1] dus = None
    import array
    du_arr = array.array("q", [0] * nterms)
    for t in range(nterms):
        du_arr[t] = terms[t][0]

    nslots = len(acc)
    for u in range(nslots):
        slot = <dict> acc[u]
        if not slot:
            continue
        for t in range(nterms):
            du_c = du_arr[t]
            u2 = u + du_c
            if u2 > max_u:
                break
            dlp = terms[t][1]
            fc = terms[t][2]
            target = <dict> out[u2]
            if fc == 1:
                for lp, c in slot.items():
                    key = lp + dlp
                    prev = target.get(key)
                    if prev is None:
                        target[key] = c
                    else:
                        v = prev + c
                        if v:
                            target[key] = v
                        else:
                            del target[key]
            else:
                for lp, c in slot.items():
                    key = lp + dlp
                    prev = target.get(key)
                    if prev is None:
                        v = c * fc
                    else:
                        v = prev + c * fc
                    if v:
                        target[key] = v
                    elif prev is not None:
                        del target[key]
    return out
