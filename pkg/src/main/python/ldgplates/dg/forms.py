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

"""Mesh-dependent H^2_h bilinear forms, Gram matrices and broken norms.

The semi product is

  <u, v> = (D^2_h u, D^2_h v) + (h^-1 [grad u], [grad v])_G + (h^-3 [u], [v])_G

over the active skeleton G of a :class:`~ldgplates.dg.skeleton.Skeleton`;
the full product adds the L^2 term.
"""

import numpy
from scipy import sparse

from ldgplates.dg import dg_space
from ldgplates.dg import skeleton as skeleton_lib

SEMI = 'semi'
FULL = 'full'
MODES = (SEMI, FULL)


def replicate(matrix, num_components):
    """Block diagonal copy of a scalar operator for vector fields."""
    if num_components == 1:
        return sparse.csr_matrix(matrix)
    return sparse.block_diag([matrix] * num_components, format='csr')


def _weighted_gram(operator, weights):
    return (operator.T @ sparse.diags(weights) @ operator).tocsr()


def mass_matrix(space):
    return space.mass_matrix()


def gradient_gram(space):
    """Matrix of (grad_h u, grad_h v)."""
    w = space.get_quadrature_weights().ravel()
    return sum(_weighted_gram(g, w) for g in space.gradient_matrices()).tocsr()


def hessian_gram(space):
    """Matrix of (D^2_h u, D^2_h v)."""
    w = space.get_quadrature_weights().ravel()
    hessians = space.hessian_matrices()
    return sum(_weighted_gram(hessians[i][j], w)
               for i in range(2) for j in range(2)).tocsr()


def jump_grams(skeleton):
    """Matrices of (h^-1 [grad u], [grad v])_G and (h^-3 [u], [v])_G."""
    ops = skeleton.operators()
    w = skeleton.get_weights()
    h = skeleton.get_h()
    grad = sum(_weighted_gram(ops.jump_grad[i], w / h) for i in range(2)).tocsr()
    value = _weighted_gram(ops.jump_value, w / h ** 3)
    return grad, value


def h2_gram(space, mode=SEMI, skeleton=None, num_components=1):
    """Gram matrix of the H^2_h product.

    :param skeleton: Active skeleton; interior edges when omitted.
    """
    if mode not in MODES:
        raise ValueError('Unknown mode: %s' % mode)
    if skeleton is None:
        skeleton = skeleton_lib.Skeleton(space)
    grad, value = jump_grams(skeleton)
    gram = hessian_gram(space) + grad + value
    if mode == FULL:
        gram = gram + space.mass_matrix()
    return replicate(gram.tocsr(), num_components)


def h2_inner(space, u, v, mode=SEMI, skeleton=None):
    """The H^2_h product of two fields, summed over components."""
    u.check_compatible(v)
    if not space.is_compatible(u.get_space()):
        raise dg_space.SpaceMismatchError('Fields do not live in %s' % space)
    gram = h2_gram(space, mode, skeleton)
    return float(numpy.sum(u.get_coefficients() * (gram @ v.get_coefficients().T).T))


def quadratic_norm(gram, field):
    c = field.get_coefficients()
    return float(numpy.sqrt(max(numpy.sum(c * (gram @ c.T).T), 0.0)))


def l2_norm(field):
    values = field.values()
    return float(numpy.sqrt(field.get_space().integrate(values ** 2).sum()))


def lp_norm(field, p):
    values = numpy.abs(field.values())
    if field.get_num_components() > 1:
        values = numpy.sqrt((values ** 2).sum(axis=0))[None]
    return float(field.get_space().integrate(values ** p).sum() ** (1.0 / p))


def gradient_norm(field):
    """The broken norm of grad_h v."""
    g = field.gradients()
    return float(numpy.sqrt(field.get_space().integrate((g ** 2).sum(axis=-1)).sum()))


def hessian_norm(field):
    hx = field.hessians()
    return float(numpy.sqrt(field.get_space().integrate(
        (hx ** 2).sum(axis=(-2, -1))).sum()))


def jump_gradient_norm(skeleton, field, grad_data=None):
    """The norm of h^-1/2 [grad_h v] on the active skeleton."""
    traces = skeleton.trace_data(field, grad_data=grad_data)
    w = skeleton.get_weights() / skeleton.get_h()
    return float(numpy.sqrt(numpy.sum(w[:, None] * traces.jump_grad ** 2)))


def jump_value_norm(skeleton, field, value_data=None, power=3):
    """The norm of h^(-power/2) [v] on the active skeleton, h^-3/2 by default."""
    traces = skeleton.trace_data(field, value_data=value_data)
    w = skeleton.get_weights() / skeleton.get_h() ** power
    return float(numpy.sqrt(numpy.sum(w * traces.jump ** 2)))


def jump_l2_norm(skeleton, field, value_data=None):
    """Unscaled L^2 norm of [v] on the active skeleton."""
    traces = skeleton.trace_data(field, value_data=value_data)
    return float(numpy.sqrt(numpy.sum(skeleton.get_weights() * traces.jump ** 2)))


def h2_seminorm(skeleton, field):
    return float(numpy.sqrt(hessian_norm(field) ** 2
                            + jump_gradient_norm(skeleton, field) ** 2
                            + jump_value_norm(skeleton, field) ** 2))


def h2_norm(skeleton, field):
    return float(numpy.sqrt(h2_seminorm(skeleton, field) ** 2 + l2_norm(field) ** 2))
