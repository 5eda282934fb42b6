# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: C reimplementation of the loops in ``_fallback``.

Bit-for-bit identical output to the pure kernels is a hard requirement
(enforced by the parity tests); any change here must be mirrored there.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free

IMPL_NAME = "compiled"

cdef uint64_t GAMMA = <uint64_t>0x9E3779B97F4A7C15


cdef inline uint64_t _next(uint64_t *state) noexcept nogil:
    cdef uint64_t z
    state[0] = state[0] + GAMMA
    z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline uint64_t _child_seed(uint64_t seed, uint64_t index) noexcept nogil:
    return seed ^ (GAMMA * (index + 1))


cdef inline int _popcount(uint64_t v) noexcept nogil:
    cdef int c = 0
    while v:
        v &= v - 1
        c += 1
    return c


def _check_params(int n, int k):
    if not (1 <= k < n <= 63):
        raise ValueError(f"kernel needs 1 <= k < n <= 63, got n={n}, k={k}")
    if n < k + (1 << (k - 1)):
        raise ValueError(f"n={n} too short for k={k}")


cdef int _fill_allowed(int n, int k, uint64_t *tails) except -1:
    # Ascending non-reserved k-bit values; mirrors reduction.allowed_tails.
    cdef uint64_t mask = (<uint64_t>1 << k) - 1
    cdef int size = 1 << k
    cdef int i, v, count
    cdef char reserved[64]
    for v in range(size):
        reserved[v] = 0
    for i in range(1, k + 1):
        reserved[(n - i) & mask] = 1
    count = 0
    for v in range(size):
        if not reserved[v]:
            tails[count] = v
            count += 1
    return count


def census_counts(int n):
    """Bits-saved histogram of the trailing-zeros codec over all 2**n pads."""
    if not 1 <= n <= 24:
        raise ValueError("census kernel supports n in 1..24")
    cdef long long *counts = <long long *>calloc(n + 1, sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    cdef uint64_t v, total = <uint64_t>1 << n
    cdef int tz
    try:
        counts[0] = 1
        v = 1
        while v < total:
            tz = 0
            while not (v >> tz) & 1:
                tz += 1
            counts[tz + 1] += 1
            v += 1
        return [counts[i] for i in range(n + 1)]
    finally:
        free(counts)


cdef inline uint64_t _effective_pad(
    int n, int k, uint64_t *tails, uint64_t *reserved, uint64_t *state
) noexcept nogil:
    cdef uint64_t w, head
    cdef int coin, i
    w = _next(state)
    coin = <int>(w >> (64 - k))
    w = _next(state)
    if coin < k:
        i = coin + 1
        head = (w >> (64 - (n - i))) >> (k - i)
        return (head << k) | reserved[i - 1]
    head = w >> (64 - (n - k))
    return (head << k) | tails[coin - k]


def reduction_length_counts(int n, int k, seed, long long trials, long long start=0):
    """Counts of transmitted length ``n - i`` for i = 0..k over the trials."""
    _check_params(n, k)
    cdef uint64_t seed64 = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef long long counts[65]
    cdef long long t
    cdef uint64_t state, w
    cdef int coin, i
    for i in range(k + 1):
        counts[i] = 0
    with nogil:
        for t in range(start, start + trials):
            state = _child_seed(seed64, <uint64_t>t)
            w = _next(&state)
            coin = <int>(w >> (64 - k))
            if coin < k:
                counts[coin + 1] += 1
            else:
                counts[0] += 1
    return [counts[i] for i in range(k + 1)]


def eve_guess_correct(int n, int k, seed, long long trials, long long start=0):
    """Correct guesses (out of trials*k) by an eavesdropper guessing the
    last k message bits uniformly after seeing the ciphertext."""
    _check_params(n, k)
    cdef uint64_t seed64 = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t kmask = (<uint64_t>1 << k) - 1
    cdef long long correct = 0
    cdef long long t
    cdef uint64_t state, w, message, guess
    with nogil:
        for t in range(start, start + trials):
            state = _child_seed(seed64, <uint64_t>t)
            w = _next(&state)            # message
            message = w >> (64 - n)
            _next(&state)                # pad coin (drawn, uninformative)
            _next(&state)                # pad bits
            w = _next(&state)            # Eve's guess
            guess = w >> (64 - k)
            correct += k - _popcount((guess ^ message) & kmask)
    return correct


def distinguisher_counts(int n, int k, m0, m1, seed, long long trials,
                         long long start=0):
    """Ciphertext histograms for the two candidate messages."""
    _check_params(n, k)
    if n > 24:
        raise ValueError("distinguisher histograms need n <= 24")
    if m0 >> n or m1 >> n or m0 < 0 or m1 < 0:
        raise ValueError("messages must be n-bit values")
    cdef uint64_t seed64 = <uint64_t>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef uint64_t mask = (<uint64_t>1 << k) - 1
    cdef uint64_t v0 = <uint64_t>m0
    cdef uint64_t v1 = <uint64_t>m1
    cdef uint64_t tails[64]
    cdef uint64_t reserved[64]
    cdef int i
    cdef long long size = <long long>1 << n
    for i in range(1, k + 1):
        reserved[i - 1] = (<uint64_t>(n - i)) & mask
    _fill_allowed(n, k, tails)
    cdef long long *hist0 = <long long *>calloc(size, sizeof(long long))
    cdef long long *hist1 = <long long *>calloc(size, sizeof(long long))
    if hist0 == NULL or hist1 == NULL:
        free(hist0)
        free(hist1)
        raise MemoryError()
    cdef long long t, j
    cdef uint64_t state, eff0, eff1
    try:
        with nogil:
            for t in range(start, start + trials):
                state = _child_seed(seed64, <uint64_t>t)
                eff0 = _effective_pad(n, k, tails, reserved, &state)
                eff1 = _effective_pad(n, k, tails, reserved, &state)
                hist0[v0 ^ eff0] += 1
                hist1[v1 ^ eff1] += 1
        return (
            [hist0[j] for j in range(size)],
            [hist1[j] for j in range(size)],
        )
    finally:
        free(hist0)
        free(hist1)
