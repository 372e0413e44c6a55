# Copyright (c) 2013 The ldgplates Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sparse SPD solves with pivot checks and iterative refinement."""

import timeit

import numpy
from scipy.sparse import linalg as sparse_linalg

from ldgplates.solver import sparse_symmetric
from ldgplates.utils import logging

RESIDUAL_TOLERANCE = 1e-10
MAX_REFINEMENTS = 3

Error = sparse_symmetric.Error


class NonPositivePivotError(Error):

    def __init__(self, index, pivot):
        Error.__init__(self, 'Non-positive pivot %g at index %d' % (pivot, index))
        self.index = index
        self.pivot = pivot


def factorize_spd(matrix):
    '''Factorizes an SPD matrix with a symmetric fill-reducing ordering.

    Pivots are taken on the diagonal, so the diagonal of U holds the pivots
    of the symmetric elimination.

    :param matrix: :class:`SparseSymmetric` or anything convertible to it.
    :returns: A :class:`scipy.sparse.linalg.SuperLU` object.
    :raises: :exc:`NonPositivePivotError` naming the original row index.
    '''
    matrix = sparse_symmetric.as_sparse_symmetric(matrix)
    full = matrix.to_csc()
    if not matrix.get_dimension():
        raise Error('Empty matrix')
    try:
        lu = sparse_linalg.splu(full, permc_spec='MMD_AT_PLUS_A', diag_pivot_thresh=0.0,
                                options=dict(SymmetricMode=True))
    except RuntimeError as e:
        raise Error('Factorization failed: %s' % e)
    pivots = lu.U.diagonal()
    bad = numpy.flatnonzero(~(pivots > 0.0))
    if len(bad):
        position = int(bad[0])
        # perm_c maps original columns to their position in the factors.
        index = int(numpy.flatnonzero(lu.perm_c == position)[0])
        raise NonPositivePivotError(index, float(pivots[position]))
    return lu


def residual_bound(norm_inf, x, rhs):
    return RESIDUAL_TOLERANCE * (norm_inf * numpy.linalg.norm(x) + numpy.linalg.norm(rhs))


def solve_spd(matrix, rhs, lu=None):
    '''Solves ``M x = rhs`` for SPD ``M``.

    The solution satisfies ``|M x - rhs| <= 1e-10 (|M|_inf |x| + |rhs|)``
    after at most three refinement passes.

    :param matrix: :class:`SparseSymmetric` flagged SPD, or a sparse matrix.
    :param rhs: Vector of length n or array of shape (n, k).
    :param lu: Optional factorization returned by :func:`factorize_spd`.
    :raises: :exc:`NonPositivePivotError`, :exc:`Error`, :exc:`ValueError`
    '''
    matrix = sparse_symmetric.as_sparse_symmetric(matrix)
    if not matrix.is_spd():
        raise Error('solve_spd needs an SPD matrix: %s' % matrix)
    rhs = numpy.asarray(rhs, dtype=float)
    if rhs.shape[0] != matrix.get_dimension():
        raise ValueError('Right-hand side has %d rows, expected %d'
                         % (rhs.shape[0], matrix.get_dimension()))
    start = timeit.default_timer()
    if lu is None:
        lu = factorize_spd(matrix)
    full = matrix.to_csc()
    norm_inf = matrix.norm_inf()
    x = lu.solve(rhs)
    residual = rhs - full @ x
    for _ in range(MAX_REFINEMENTS):
        if numpy.linalg.norm(residual) <= residual_bound(norm_inf, x, rhs):
            break
        x = x + lu.solve(residual)
        residual = rhs - full @ x
    norm = numpy.linalg.norm(residual)
    if norm > residual_bound(norm_inf, x, rhs):
        raise Error('SPD solve did not reach the residual bound: %g' % norm)
    logging.debug('Solved SPD system of dimension %d in %f second(s)',
                  matrix.get_dimension(), timeit.default_timer() - start)
    return x
