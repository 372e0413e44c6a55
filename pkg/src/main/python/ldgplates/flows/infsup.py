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

"""Norms and constants of the flows: the flow Gram matrix, the discrete
Poincare constant and the inf-sup estimate of the constraint block.
"""

from scipy import linalg
from scipy.sparse import linalg as sparse_linalg

from ldgplates import solver
from ldgplates.solver import singular_values
from ldgplates.dg import forms
from ldgplates.energy import bending
from ldgplates.energy import defect
from ldgplates.utils import logging

DENSE_EIGEN_LIMIT = 3000


def flow_gram(assembly, num_components=1):
    '''Gram matrix of the flow inner product.

    The full product with the L^2 term on free boundaries, the semi product
    with Dirichlet edges otherwise.
    '''
    skeleton = assembly.get_skeleton()
    mode = forms.SEMI if skeleton.includes_dirichlet() else forms.FULL
    return forms.h2_gram(assembly.get_space(), mode, skeleton, num_components)


def largest_generalized_eigenvalue(matrix, gram):
    n = matrix.shape[0]
    if n <= DENSE_EIGEN_LIMIT:
        values = linalg.eigh(matrix.toarray(), gram.toarray(), eigvals_only=True,
                             subset_by_index=[n - 1, n - 1])
        return float(values[-1])
    values = sparse_linalg.eigsh(matrix.tocsc(), k=1, M=gram.tocsc(), which='LA',
                                 return_eigenvectors=False)
    return float(values[0])


def poincare_constant(assembly):
    '''Smallest c with ||grad_h v||^2 <= c ||v||^2 in the flow norm.'''
    space = assembly.get_space()
    return largest_generalized_eigenvalue(forms.gradient_gram(space), flow_gram(assembly))


def estimate_infsup(assembly, y_anchor, gram=None):
    '''Inf-sup constant of b_h(y_anchor; ., .) in the flow norm and L^2.

    Purely diagnostic. Returns ``None`` when the multiplier space exceeds the
    dense limit.
    '''
    space = assembly.get_space()
    constraints = defect.constraint_matrix(y_anchor)
    if constraints.shape[0] > singular_values.DENSE_LIMIT:
        logging.warning('Skipping the inf-sup estimate: %d multipliers exceed the '
                        'dense limit', constraints.shape[0])
        return None
    if gram is None:
        gram = flow_gram(assembly, bending.NUM_COMPONENTS)
    beta = solver.smallest_generalized_singular_value(constraints, gram,
                                                      defect.multiplier_gram(space))
    logging.debug('Inf-sup estimate %g for %d multipliers', beta, constraints.shape[0])
    return beta
