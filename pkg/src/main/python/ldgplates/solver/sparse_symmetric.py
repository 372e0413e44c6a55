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

from scipy import sparse

SPD = 'spd'
INDEFINITE = 'indefinite'
KINDS = (SPD, INDEFINITE)

SYMMETRY_TOLERANCE = 1e-12


class Error(Exception):
    pass


class SparseSymmetric(object):
    """Symmetric sparse matrix stored by its lower triangle.

    :param matrix: Square matrix, sparse or dense.
    :param kind: :data:`SPD` or :data:`INDEFINITE`.
    :param check_symmetry: Reject matrices whose asymmetry exceeds
      ``SYMMETRY_TOLERANCE`` times the largest entry.
    """

    def __init__(self, matrix, kind=SPD, check_symmetry=True):
        if kind not in KINDS:
            raise ValueError('Unknown matrix kind: %s' % kind)
        matrix = sparse.csr_matrix(matrix, dtype=float)
        if matrix.shape[0] != matrix.shape[1]:
            raise ValueError('Matrix must be square: %s' % (matrix.shape,))
        if check_symmetry and matrix.nnz:
            scale = abs(matrix).max()
            asymmetry = abs(matrix - matrix.T).max()
            if asymmetry > SYMMETRY_TOLERANCE * max(scale, 1.0):
                raise Error('Matrix is not symmetric: asymmetry %g' % asymmetry)
        self._kind = kind
        self._lower = sparse.tril(matrix, format='csc')
        self._full = None

    def get_dimension(self):
        return self._lower.shape[0]

    def get_kind(self):
        return self._kind

    def is_spd(self):
        return self._kind == SPD

    def get_lower(self):
        return self._lower

    def to_csc(self):
        '''Returns the full matrix in compressed column storage.'''
        if self._full is None:
            strict = sparse.tril(self._lower, k=-1)
            self._full = (self._lower + strict.T).tocsc()
        return self._full

    def diagonal(self):
        return self._lower.diagonal()

    def norm_inf(self):
        full = self.to_csc()
        if not full.nnz:
            return 0.0
        return float(abs(full).sum(axis=1).max())

    def dot(self, x):
        return self.to_csc() @ x

    def __str__(self):
        return '%s[n=%d, nnz(lower)=%d, kind=%s]' % (
            self.__class__.__name__, self.get_dimension(), self._lower.nnz, self._kind)


def as_sparse_symmetric(matrix, kind=SPD):
    if isinstance(matrix, SparseSymmetric):
        return matrix
    return SparseSymmetric(matrix, kind)
