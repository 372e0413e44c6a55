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

"""Saddle point systems with grouped constraint rows.

Constraint rows come in groups (three per element for the linearized metric
constraint). Each group is replaced by an orthonormal combination of its
rows of full rank, so dependent rows are dropped per group and the
multiplier is recovered with minimum norm.
"""

import numpy
from scipy import sparse

from ldgplates.solver import sparse_symmetric
from ldgplates.utils import logging

GROUP_SIZE = 3
RANK_TOLERANCE = 1e-10


class SaddleSystem(object):
    """The block system ``[[A, B^T], [B, 0]]``.

    :param matrix: Primal block A, a :class:`SparseSymmetric` or a matrix.
    :param constraints: Constraint block B of shape (m, n).
    :param row_groups: Sequence of row index sequences partitioning
      ``range(m)``. Defaults to consecutive triples when m is a multiple of
      three, otherwise a single group.
    :param spd: Whether A is required to be SPD.
    """

    def __init__(self, matrix, constraints, row_groups=None, spd=True):
        kind = sparse_symmetric.SPD if spd else sparse_symmetric.INDEFINITE
        if isinstance(matrix, sparse_symmetric.SparseSymmetric):
            if spd and not matrix.is_spd():
                raise ValueError('Primal block is not flagged SPD: %s' % matrix)
            self._matrix = matrix
        else:
            self._matrix = sparse_symmetric.SparseSymmetric(matrix, kind)
        self._spd = spd
        self._kkt = None
        n = self._matrix.get_dimension()
        if constraints is None:
            constraints = sparse.csr_matrix((0, n))
        self._constraints = sparse.csr_matrix(constraints, dtype=float)
        m = self._constraints.shape[0]
        if self._constraints.shape[1] != n:
            raise ValueError('Constraint block has %d columns, expected %d'
                             % (self._constraints.shape[1], n))
        if row_groups is None:
            if m % GROUP_SIZE == 0:
                row_groups = numpy.arange(m).reshape(-1, GROUP_SIZE)
            else:
                row_groups = [numpy.arange(m)]
        self._row_groups = [numpy.asarray(group, dtype=int) for group in row_groups]
        covered = numpy.sort(numpy.concatenate(self._row_groups)) if m else numpy.zeros(0)
        if len(covered) != m or (m and not numpy.array_equal(covered, numpy.arange(m))):
            raise ValueError('Row groups must partition the %d constraint rows' % m)
        self._reduce()

    def _reduce(self):
        factors = []
        for group in self._row_groups:
            block = self._constraints[group]
            columns = numpy.unique(block.indices)
            if not len(columns):
                factors.append((numpy.zeros((len(group), 0)), numpy.zeros(0)))
                continue
            dense = block[:, columns].toarray()
            u, s, _ = numpy.linalg.svd(dense, full_matrices=False)
            factors.append((u, s))
        largest = max([s.max() for _, s in factors if len(s)] or [0.0])
        threshold = RANK_TOLERANCE * largest
        self._bases = []
        rows = []
        self._deficiency = 0
        for group, (u, s) in zip(self._row_groups, factors):
            rank = int(numpy.count_nonzero(s > threshold)) if largest > 0.0 else 0
            basis = u[:, :rank]
            self._bases.append(basis)
            self._deficiency += len(group) - rank
            if rank:
                rows.append(sparse.csr_matrix(basis.T) @ self._constraints[group])
        n = self._matrix.get_dimension()
        if rows:
            self._reduced = sparse.vstack(rows, format='csr')
        else:
            self._reduced = sparse.csr_matrix((0, n))
        if self._deficiency:
            logging.warning('Constraint block is rank deficient: %d dependent row(s) dropped',
                            self._deficiency)

    def get_matrix(self):
        return self._matrix

    def get_constraints(self):
        return self._constraints

    def get_reduced_constraints(self):
        return self._reduced

    def get_row_groups(self):
        return self._row_groups

    def get_deficiency(self):
        return self._deficiency

    def get_num_primal(self):
        return self._matrix.get_dimension()

    def get_num_constraints(self):
        return self._constraints.shape[0]

    def get_num_reduced_constraints(self):
        return self._reduced.shape[0]

    def is_spd(self):
        return self._spd

    def reduce_rhs(self, constraint_rhs):
        '''Maps a right-hand side of ``B x = g`` onto the reduced rows.'''
        constraint_rhs = numpy.asarray(constraint_rhs, dtype=float)
        if constraint_rhs.shape != (self.get_num_constraints(),):
            raise ValueError('Constraint right-hand side has shape %s, expected (%d,)'
                             % (constraint_rhs.shape, self.get_num_constraints()))
        parts = [basis.T @ constraint_rhs[group]
                 for group, basis in zip(self._row_groups, self._bases)]
        return numpy.concatenate(parts) if parts else numpy.zeros(0)

    def expand_multiplier(self, reduced):
        '''Maps a reduced multiplier back onto the original rows.'''
        multiplier = numpy.zeros(self.get_num_constraints())
        offset = 0
        for group, basis in zip(self._row_groups, self._bases):
            rank = basis.shape[1]
            multiplier[group] = basis @ reduced[offset:offset + rank]
            offset += rank
        return multiplier

    def kkt_matrix(self):
        '''Returns the reduced block matrix in compressed column storage.'''
        if self._kkt is None:
            reduced = self._reduced
            if not reduced.shape[0]:
                self._kkt = self._matrix.to_csc()
            else:
                self._kkt = sparse.bmat([[self._matrix.to_csc(), reduced.T], [reduced, None]],
                                        format='csc')
        return self._kkt

    def __str__(self):
        return '%s[n=%d, m=%d, deficiency=%d]' % (
            self.__class__.__name__, self.get_num_primal(), self.get_num_constraints(),
            self._deficiency)
