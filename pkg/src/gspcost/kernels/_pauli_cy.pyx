# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Cython statevector kernels; same contract as ``_pauli_np``."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline double complex _i_power(int y_count) nogil:
    cdef int r = y_count % 4
    if r == 0:
        return 1.0
    if r == 1:
        return 1.0j
    if r == 2:
        return -1.0
    return -1.0j


def apply_pauli(unsigned long long x_mask, unsigned long long z_mask,
                int y_count, const cnp.complex128_t[::1] psi):
    cdef Py_ssize_t dim = psi.shape[0]
    out_arr = np.empty(dim, dtype=np.complex128)
    cdef cnp.complex128_t[::1] out = out_arr
    cdef double complex phase = _i_power(y_count)
    cdef Py_ssize_t j
    cdef unsigned long long src
    with nogil:
        for j in range(dim):
            src = (<unsigned long long> j) ^ x_mask
            if __builtin_popcountll(src & z_mask) & 1:
                out[j] = -phase * psi[src]
            else:
                out[j] = phase * psi[src]
    return out_arr


def apply_exp(unsigned long long x_mask, unsigned long long z_mask,
              int y_count, double angle, const cnp.complex128_t[::1] psi):
    cdef Py_ssize_t dim = psi.shape[0]
    out_arr = np.empty(dim, dtype=np.complex128)
    cdef cnp.complex128_t[::1] out = out_arr
    cdef double c = cos(angle)
    cdef double complex phase = 1.0j * sin(angle) * _i_power(y_count)
    cdef Py_ssize_t j
    cdef unsigned long long src
    with nogil:
        for j in range(dim):
            src = (<unsigned long long> j) ^ x_mask
            if __builtin_popcountll(src & z_mask) & 1:
                out[j] = c * psi[j] - phase * psi[src]
            else:
                out[j] = c * psi[j] + phase * psi[src]
    return out_arr


def expectation(unsigned long long x_mask, unsigned long long z_mask,
                int y_count, const cnp.complex128_t[::1] psi):
    cdef Py_ssize_t dim = psi.shape[0]
    cdef double complex phase = _i_power(y_count)
    cdef double complex acc = 0.0
    cdef Py_ssize_t j
    cdef unsigned long long src
    with nogil:
        for j in range(dim):
            src = (<unsigned long long> j) ^ x_mask
            if __builtin_popcountll(src & z_mask) & 1:
                acc -= psi[j].conjugate() * psi[src]
            else:
                acc += psi[j].conjugate() * psi[src]
    return complex(phase * acc)
