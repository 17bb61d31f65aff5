# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels: same five histogram functions as the pure
module, with the nested descents running over C arrays.  Counts stay within
unsigned 64-bit range because callers budget the number of enumerated tuples.
"""

from libc.stdlib cimport calloc, free, malloc


cdef long long* _step_table(int n, object coeffs, int k) except NULL:
    cdef long long* steps = <long long*> malloc(k * n * sizeof(long long))
    if steps == NULL:
        raise MemoryError()
    cdef int i, x
    cdef long long a
    for i in range(k):
        a = <long long> (coeffs[i] % n)
        for x in range(n):
            steps[i * n + x] = (a * x) % n
    return steps


cdef void _rec_all(int pos, int k, int n, long long acc,
                   long long* steps, unsigned long long* hist) noexcept:
    cdef int x
    cdef long long s
    cdef long long* step = steps + pos * n
    if pos == k - 1:
        for x in range(n):
            s = acc + step[x]
            if s >= n:
                s -= n
            hist[s] += 1
    else:
        for x in range(n):
            s = acc + step[x]
            if s >= n:
                s -= n
            _rec_all(pos + 1, k, n, s, steps, hist)


cdef void _rec_strict(int pos, int k, int n, int limit, long long acc,
                      long long* steps, unsigned long long* hist) noexcept:
    cdef int x, need
    cdef long long s
    cdef long long* step = steps + pos * n
    need = k - 1 - pos
    if need == 0:
        for x in range(limit):
            s = acc + step[x]
            if s >= n:
                s -= n
            hist[s] += 1
    else:
        for x in range(need, limit):
            s = acc + step[x]
            if s >= n:
                s -= n
            _rec_strict(pos + 1, k, n, x, s, steps, hist)


cdef void _rec_distinct(int pos, int k, int n, long long acc, char* used,
                        long long* steps, unsigned long long* hist) noexcept:
    cdef int x
    cdef long long s
    cdef long long* step = steps + pos * n
    if pos == k - 1:
        for x in range(n):
            if not used[x]:
                s = acc + step[x]
                if s >= n:
                    s -= n
                hist[s] += 1
    else:
        for x in range(n):
            if not used[x]:
                used[x] = 1
                s = acc + step[x]
                if s >= n:
                    s -= n
                _rec_distinct(pos + 1, k, n, s, used, steps, hist)
                used[x] = 0


cdef void _rec_blocks(int pos, int k, int n, int prev, long long acc,
                      char* fresh, long long* steps,
                      unsigned long long* hist) noexcept:
    cdef int x, top
    cdef long long s
    cdef long long* step = steps + pos * n
    top = n if fresh[pos] else prev + 1
    if pos == k - 1:
        for x in range(top):
            s = acc + step[x]
            if s >= n:
                s -= n
            hist[s] += 1
    else:
        for x in range(top):
            s = acc + step[x]
            if s >= n:
                s -= n
            _rec_blocks(pos + 1, k, n, x, s, fresh, steps, hist)


cdef void _rec_domain(int pos, int k, int n, int m, long long acc,
                      long long* values, unsigned long long* hist) noexcept:
    cdef int x
    cdef long long s
    cdef long long* vals = values + pos * m
    if pos == k - 1:
        for x in range(m):
            s = acc + vals[x]
            if s >= n:
                s -= n
            hist[s] += 1
    else:
        for x in range(m):
            s = acc + vals[x]
            if s >= n:
                s -= n
            _rec_domain(pos + 1, k, n, m, s, values, hist)


cdef list _collect(unsigned long long* hist, int n):
    cdef int i
    out = [0] * n
    for i in range(n):
        out[i] = hist[i]
    return out


def hist_all(int n, coeffs):
    """Histogram over all tuples in [0, n)^k."""
    cdef int k = len(coeffs)
    cdef long long* steps = _step_table(n, coeffs, k)
    cdef unsigned long long* hist = <unsigned long long*> calloc(n, sizeof(unsigned long long))
    if hist == NULL:
        free(steps)
        raise MemoryError()
    try:
        _rec_all(0, k, n, 0, steps, hist)
        return _collect(hist, n)
    finally:
        free(steps)
        free(hist)


def hist_strict(int n, coeffs):
    """Histogram over strictly decreasing tuples x1 > x2 > ... > xk."""
    cdef int k = len(coeffs)
    if k > n:
        return [0] * n
    cdef long long* steps = _step_table(n, coeffs, k)
    cdef unsigned long long* hist = <unsigned long long*> calloc(n, sizeof(unsigned long long))
    if hist == NULL:
        free(steps)
        raise MemoryError()
    try:
        _rec_strict(0, k, n, n, 0, steps, hist)
        return _collect(hist, n)
    finally:
        free(steps)
        free(hist)


def hist_distinct(int n, coeffs):
    """Histogram over tuples with pairwise distinct coordinates."""
    cdef int k = len(coeffs)
    if k > n:
        return [0] * n
    cdef long long* steps = _step_table(n, coeffs, k)
    cdef unsigned long long* hist = <unsigned long long*> calloc(n, sizeof(unsigned long long))
    cdef char* used = <char*> calloc(n, sizeof(char))
    if hist == NULL or used == NULL:
        free(steps); free(hist); free(used)
        raise MemoryError()
    try:
        _rec_distinct(0, k, n, 0, used, steps, hist)
        return _collect(hist, n)
    finally:
        free(steps)
        free(hist)
        free(used)


def hist_blocks(int n, sizes, coeffs):
    """Histogram over tuples weakly decreasing inside each coefficient block."""
    flat_coeffs = []
    flags = []
    for size, a in zip(sizes, coeffs):
        for j in range(size):
            flat_coeffs.append(a)
            flags.append(1 if j == 0 else 0)
    cdef int k = len(flat_coeffs)
    cdef long long* steps = _step_table(n, flat_coeffs, k)
    cdef unsigned long long* hist = <unsigned long long*> calloc(n, sizeof(unsigned long long))
    cdef char* fresh = <char*> malloc(k * sizeof(char))
    if hist == NULL or fresh == NULL:
        free(steps); free(hist); free(fresh)
        raise MemoryError()
    cdef int i
    for i in range(k):
        fresh[i] = <char> flags[i]
    try:
        _rec_blocks(0, k, n, n - 1, 0, fresh, steps, hist)
        return _collect(hist, n)
    finally:
        free(steps)
        free(hist)
        free(fresh)


def hist_domain(int n, coeffs, domain):
    """Histogram over tuples whose coordinates all lie in ``domain``."""
    cdef int k = len(coeffs)
    cdef int m = len(domain)
    cdef long long* values = <long long*> malloc(k * m * sizeof(long long))
    cdef unsigned long long* hist = <unsigned long long*> calloc(n, sizeof(unsigned long long))
    if values == NULL or hist == NULL:
        free(values); free(hist)
        raise MemoryError()
    cdef int i, x
    cdef long long a
    for i in range(k):
        a = <long long> (coeffs[i] % n)
        for x in range(m):
            values[i * m + x] = (a * <long long> domain[x]) % n
    try:
        _rec_domain(0, k, n, m, 0, values, hist)
        return _collect(hist, n)
    finally:
        free(values)
        free(hist)
