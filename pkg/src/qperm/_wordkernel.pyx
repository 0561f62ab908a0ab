# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word-combinatorics kernel.

Twin of qperm._wordkernel_py with identical semantics; see that module for
the reduction rules.  The chain enumeration and reduction stacks run on C
arrays, Python objects are only materialized at surviving leaves.
"""

from libc.stdlib cimport free, malloc


def reduce_letters(letters):
    """Reduce a letter tuple; return the reduced tuple, or None if the word is zero."""
    cdef Py_ssize_t total = len(letters)
    cdef Py_ssize_t pos, top
    if total == 0:
        return ()
    cdef int* rw = <int*> malloc(2 * total * sizeof(int))
    if rw == NULL:
        raise MemoryError()
    cdef int i, j
    top = 0
    try:
        for pos in range(total):
            i = letters[pos][0]
            j = letters[pos][1]
            if top > 0:
                if rw[2 * top - 2] == i and rw[2 * top - 1] == j:
                    continue
                if rw[2 * top - 2] == i or rw[2 * top - 1] == j:
                    return None
            rw[2 * top] = i
            rw[2 * top + 1] = j
            top += 1
        return tuple([(rw[2 * pos], rw[2 * pos + 1]) for pos in range(top)])
    finally:
        free(rw)


cdef class _Expander:
    cdef int n, m
    cdef Py_ssize_t total
    cdef int* lrow          # letter rows of the input word
    cdef int* lcol          # letter cols
    cdef int* st            # m reduction stacks of (row, col), each <= total deep
    cdef Py_ssize_t* st_len
    cdef dict out
    cdef list pairs         # interned (i, j) tuples, index (i-1)*n + (j-1)

    def __cinit__(self, letters, int n, int m):
        cdef Py_ssize_t pos
        cdef int i, j
        self.n = n
        self.m = m
        self.total = len(letters)
        self.out = {}
        self.lrow = <int*> malloc(max(self.total, 1) * sizeof(int))
        self.lcol = <int*> malloc(max(self.total, 1) * sizeof(int))
        self.st = <int*> malloc(max(2 * m * self.total, 1) * sizeof(int))
        self.st_len = <Py_ssize_t*> malloc(m * sizeof(Py_ssize_t))
        if self.lrow == NULL or self.lcol == NULL or self.st == NULL or self.st_len == NULL:
            raise MemoryError()
        for pos in range(self.total):
            self.lrow[pos] = letters[pos][0]
            self.lcol[pos] = letters[pos][1]
        for pos in range(m):
            self.st_len[pos] = 0
        self.pairs = [None] * (n * n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                self.pairs[(i - 1) * n + (j - 1)] = (i, j)

    def __dealloc__(self):
        free(self.lrow)
        free(self.lcol)
        free(self.st)
        free(self.st_len)

    cdef Py_ssize_t _push(self, int t, int a, int b):
        # returns the pre-push stack length, or -1 when the leg became zero
        cdef Py_ssize_t L = self.st_len[t]
        cdef int* base = self.st + 2 * t * self.total
        if L > 0:
            if base[2 * L - 2] == a and base[2 * L - 1] == b:
                return L
            if base[2 * L - 2] == a or base[2 * L - 1] == b:
                return -1
        base[2 * L] = a
        base[2 * L + 1] = b
        self.st_len[t] = L + 1
        return L

    cdef void _emit(self):
        cdef list legs = []
        cdef Py_ssize_t t, k
        cdef int* base
        cdef tuple key
        for t in range(self.m):
            base = self.st + 2 * t * self.total
            legs.append(tuple([self.pairs[(base[2 * k] - 1) * self.n + (base[2 * k + 1] - 1)]
                               for k in range(self.st_len[t])]))
        key = tuple(legs)
        self.out[key] = self.out.get(key, 0) + 1

    cdef void _letter_rec(self, Py_ssize_t pos):
        if pos == self.total:
            self._emit()
            return
        self._chain_rec(pos, 0, self.lrow[pos])

    cdef void _chain_rec(self, Py_ssize_t pos, int t, int prev):
        cdef Py_ssize_t saved
        cdef int k
        if t == self.m - 1:
            saved = self._push(t, prev, self.lcol[pos])
            if saved >= 0:
                self._letter_rec(pos + 1)
                self.st_len[t] = saved
            return
        for k in range(1, self.n + 1):
            saved = self._push(t, prev, k)
            if saved >= 0:
                self._chain_rec(pos, t + 1, k)
                self.st_len[t] = saved

    def run(self):
        self._letter_rec(0)
        return self.out


def expand_legs(letters, n, legs):
    """Iterated coproduct of a word, all legs reduced eagerly.

    Same contract as qperm._wordkernel_py.expand_legs.
    """
    return _Expander(letters, n, legs).run()


def reduced_words_exact(n, length):
    """All reduced words with exactly `length` letters, in lexicographic order."""
    cdef int nn = n
    cdef Py_ssize_t ln = length
    if ln == 0:
        return [()]
    cdef list out = []
    cdef list pairs = [None] * (nn * nn)
    cdef int i, j
    for i in range(1, nn + 1):
        for j in range(1, nn + 1):
            pairs[(i - 1) * nn + (j - 1)] = (i, j)
    cdef int* wr = <int*> malloc(ln * sizeof(int))
    cdef int* wc = <int*> malloc(ln * sizeof(int))
    if wr == NULL or wc == NULL:
        raise MemoryError()
    try:
        _words_rec(nn, ln, 0, 0, 0, wr, wc, pairs, out)
    finally:
        free(wr)
        free(wc)
    return out


cdef void _words_rec(int n, Py_ssize_t length, Py_ssize_t depth, int prow, int pcol,
                     int* wr, int* wc, list pairs, list out):
    cdef int i, j
    cdef Py_ssize_t k
    if depth == length:
        out.append(tuple([pairs[(wr[k] - 1) * n + (wc[k] - 1)] for k in range(length)]))
        return
    for i in range(1, n + 1):
        if i == prow:
            continue
        for j in range(1, n + 1):
            if j == pcol:
                continue
            wr[depth] = i
            wc[depth] = j
            _words_rec(n, length, depth + 1, i, j, wr, wc, pairs, out)
