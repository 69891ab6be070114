# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled window-tally kernel; same contract as rdflink._window_py."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE
from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from cpython.ref cimport PyObject

BACKEND = "cython"


def best_windows(list encoded, Py_ssize_t x, Py_ssize_t width):
    """Count every length-x window over the packed sequences.

    Returns (max_count, winners) with winners the sorted packed windows
    achieving max_count, or None when no sequence admits a window.
    """
    cdef dict counts = {}
    cdef Py_ssize_t w = width * x
    cdef Py_ssize_t n, off
    cdef bytes data, key
    cdef const char* base
    cdef PyObject* hit
    cdef object one = 1

    for data in encoded:
        n = PyBytes_GET_SIZE(data)
        base = PyBytes_AS_STRING(data)
        off = 0
        while off + w <= n:
            key = PyBytes_FromStringAndSize(base + off, w)
            hit = PyDict_GetItem(counts, key)
            if hit is NULL:
                PyDict_SetItem(counts, key, one)
            else:
                PyDict_SetItem(counts, key, (<object>hit) + 1)
            off += width

    if not counts:
        return None
    cdef Py_ssize_t best = 0
    cdef Py_ssize_t value
    for count in counts.values():
        value = count
        if value > best:
            best = value
    winners = sorted(k for k, v in counts.items() if v == best)
    return best, winners
