# cython: language_level=3
# distutils: language = c++
"""Compiled cross-product kernels for mass combination.

Same contract and floating-point operation order as ``_kernels_py`` (the
accumulation is left-major in both), so the two backends agree bit for bit.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.algorithm cimport sort
from libcpp.pair cimport pair
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

ctypedef unsigned long long u64

BACKEND = "compiled"


def combine_products(masks1, masses1, masks2, masses2):
    """Cross-product accumulation; see ``_kernels_py.combine_products``."""
    cdef Py_ssize_t n1 = len(masks1)
    cdef Py_ssize_t n2 = len(masks2)
    cdef vector[u64] b1, b2
    cdef vector[double] w1, w2
    cdef Py_ssize_t i, j
    b1.reserve(n1)
    w1.reserve(n1)
    for i in range(n1):
        b1.push_back(masks1[i])
        w1.push_back(masses1[i])
    b2.reserve(n2)
    w2.reserve(n2)
    for j in range(n2):
        b2.push_back(masks2[j])
        w2.push_back(masses2[j])

    cdef unordered_map[u64, double] acc
    cdef double conflict = 0.0
    cdef double p
    cdef u64 inter
    with nogil:
        for i in range(n1):
            for j in range(n2):
                inter = b1[i] & b2[j]
                p = w1[i] * w2[j]
                if inter == 0:
                    conflict += p
                else:
                    acc[inter] += p

    cdef vector[pair[u64, double]] items
    items.reserve(acc.size())
    cdef unordered_map[u64, double].iterator it = acc.begin()
    while it != acc.end():
        items.push_back(deref(it))
        inc(it)
    sort(items.begin(), items.end())

    masks = []
    products = []
    for i in range(<Py_ssize_t>items.size()):
        masks.append(items[i].first)
        products.append(items[i].second)
    return masks, products, conflict


def conflict_weight(masks1, masses1, masks2, masses2):
    """Total product weight landing on empty intersections."""
    cdef Py_ssize_t n1 = len(masks1)
    cdef Py_ssize_t n2 = len(masks2)
    cdef vector[u64] b1, b2
    cdef vector[double] w1, w2
    cdef Py_ssize_t i, j
    b1.reserve(n1)
    w1.reserve(n1)
    for i in range(n1):
        b1.push_back(masks1[i])
        w1.push_back(masses1[i])
    b2.reserve(n2)
    w2.reserve(n2)
    for j in range(n2):
        b2.push_back(masks2[j])
        w2.push_back(masses2[j])

    cdef double conflict = 0.0
    with nogil:
        for i in range(n1):
            for j in range(n2):
                if b1[i] & b2[j] == 0:
                    conflict += w1[i] * w2[j]
    return conflict
