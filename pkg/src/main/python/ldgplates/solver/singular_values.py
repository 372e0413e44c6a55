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

import numpy
from scipy import linalg
from scipy import sparse

from ldgplates.solver import linear
from ldgplates.solver import sparse_symmetric

DENSE_LIMIT = 10000


def smallest_generalized_singular_value(constraints, gram_v, gram_mu):
    '''Returns ``min_mu max_v mu^T B v / (|v|_{G_v} |mu|_{G_mu})``.

    The inner maximum is ``|G_v^{-1/2} B^T mu|``, so the value is the square
    root of the smallest eigenvalue of the pencil ``(B G_v^{-1} B^T, G_mu)``.
    Dense in the multiplier dimension.

    :raises: :exc:`~ldgplates.solver.linear.Error` when a Gram matrix is not
      SPD, :exc:`ValueError` on shape mismatch.
    '''
    constraints = sparse.csr_matrix(constraints, dtype=float)
    m, n = constraints.shape
    if gram_v.shape != (n, n) or gram_mu.shape != (m, m):
        raise ValueError('Gram shapes %s, %s do not match B of shape %s'
                         % (gram_v.shape, gram_mu.shape, constraints.shape))
    if not m:
        raise ValueError('Empty constraint block')
    try:
        lu = linear.factorize_spd(sparse_symmetric.SparseSymmetric(gram_v))
    except linear.Error as e:
        raise linear.Error('Primal Gram matrix is not SPD: %s' % e)
    solved = lu.solve(constraints.T.toarray())
    schur = constraints @ solved
    schur = 0.5 * (schur + schur.T)
    gram_mu = gram_mu.toarray() if sparse.issparse(gram_mu) else numpy.asarray(gram_mu)
    try:
        values = linalg.eigh(schur, gram_mu, eigvals_only=True)
    except linalg.LinAlgError as e:
        raise linear.Error('Multiplier Gram matrix is not SPD: %s' % e)
    return float(numpy.sqrt(max(values[0], 0.0)))
