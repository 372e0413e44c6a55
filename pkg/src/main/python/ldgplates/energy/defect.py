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

"""Metric defect D_h and the linearized metric constraint b_h."""

import numpy
from scipy import sparse

from ldgplates.utils.math import tensor2

# Multiplier entries per element, in row order of the constraint matrix.
MULTIPLIER_ENTRIES = ((0, 0), (1, 1), (0, 1))


def _first_fundamental_form(y):
    grads = y.gradients()
    return numpy.einsum('ceqa,ceqb->eqab', grads, grads)


def element_defects(y, metric):
    """``(e, 2, 2)`` integrals of grad y^T grad y - g over every element."""
    space = y.get_space()
    g, _ = metric.at_quadrature(space)
    residual = _first_fundamental_form(y) - g
    return numpy.einsum('eqab,eq->eab', residual, space.get_quadrature_weights())


def defect_density(y, metric):
    """Per element Frobenius norms |int_T grad y^T grad y - g|."""
    return tensor2.frobenius_norm(element_defects(y, metric))


def metric_defect(y, metric):
    """D_h(y) = sum_T |int_T grad y^T grad y - g|."""
    return float(defect_density(y, metric).sum())


def stretching_residual_l1(y, metric):
    """The L^1 norm of grad y^T grad y - g."""
    space = y.get_space()
    g, _ = metric.at_quadrature(space)
    return float(space.integrate(tensor2.frobenius_norm(_first_fundamental_form(y) - g)))


def _check_multiplier(space, multiplier):
    multiplier = numpy.asarray(multiplier, dtype=float)
    ne = space.get_mesh().get_num_elements()
    if multiplier.shape != (ne, 2, 2):
        raise ValueError('Expected a (%d, 2, 2) multiplier, got %s' % (ne, multiplier.shape))
    asymmetry = abs(multiplier[:, 0, 1] - multiplier[:, 1, 0])
    if (asymmetry > 1e-12 * (1.0 + abs(multiplier).max())).any():
        element = int(numpy.argmax(asymmetry))
        raise ValueError('Multiplier is not symmetric on element %d' % element)
    return multiplier


def form_bh(y_anchor, v, multiplier):
    """b_h(y; v, mu) = sum_T int_T mu : (grad v^T grad y + grad y^T grad v).

    :param multiplier: ``(e, 2, 2)`` symmetric, constant per element.
    """
    y_anchor.check_compatible(v)
    space = v.get_space()
    multiplier = _check_multiplier(space, multiplier)
    gy = y_anchor.gradients()
    gv = v.gradients()
    linearized = (numpy.einsum('ceqa,ceqb->eqab', gv, gy)
                  + numpy.einsum('ceqa,ceqb->eqab', gy, gv))
    integrals = numpy.einsum('eqab,eq->eab', linearized, space.get_quadrature_weights())
    return float(numpy.sum(multiplier * integrals))


def constraint_matrix(y_anchor):
    """Sparse B with rows (L11, L22, 2 L12) of every element.

    The linearized constraint is L_T(y; v) = int_T grad v^T grad y +
    grad y^T grad v, and ``mu . B v = b_h(y; v, mu)`` for multiplier vectors
    holding ``(mu11, mu22, mu12)`` per element. Columns follow the
    component-major dof layout of 3-vector fields.
    """
    space = y_anchor.get_space()
    ne = space.get_mesh().get_num_elements()
    nb = space.get_num_local_dofs()
    ndofs = space.get_num_dofs()
    c = y_anchor.get_num_components()
    basis = space.get_basis_gradients()
    gy = y_anchor.gradients()
    w = space.get_quadrature_weights()
    rows, cols, data = [], [], []
    elements = numpy.arange(ne)
    for r, (a, b) in enumerate(MULTIPLIER_ENTRIES):
        factor = 2.0 if a != b else 1.0
        # (c, e, nb) integrals of d_a phi d_b y_m + d_a y_m d_b phi.
        entries = factor * (numpy.einsum('eq,eqi,ceq->cei', w, basis[..., a], gy[..., b])
                            + numpy.einsum('eq,ceq,eqi->cei', w, gy[..., a], basis[..., b]))
        for m in range(c):
            rows.append(numpy.repeat(3 * elements + r, nb))
            cols.append((m * ndofs + elements[:, None] * nb + numpy.arange(nb)).ravel())
            data.append(entries[m].ravel())
    return sparse.csr_matrix((numpy.concatenate(data),
                              (numpy.concatenate(rows), numpy.concatenate(cols))),
                             shape=(3 * ne, c * ndofs))


def multiplier_gram(space):
    """Gram matrix of the L^2 product of piecewise constant symmetric tensors."""
    areas = space.get_mesh().get_element_areas()
    return sparse.diags(numpy.repeat(areas, 3) * numpy.tile([1.0, 1.0, 2.0], len(areas)))


def multiplier_vector(multiplier):
    """``(e, 2, 2)`` symmetric tensors as ``(mu11, mu22, mu12)`` rows."""
    multiplier = numpy.asarray(multiplier, dtype=float)
    return numpy.stack([multiplier[:, a, b] for a, b in MULTIPLIER_ENTRIES], axis=1).ravel()


def multiplier_tensor(vector):
    values = numpy.asarray(vector, dtype=float).reshape(-1, 3)
    out = numpy.empty((len(values), 2, 2))
    out[:, 0, 0] = values[:, 0]
    out[:, 1, 1] = values[:, 1]
    out[:, 0, 1] = out[:, 1, 0] = values[:, 2]
    return out


def constraint_residual(y_anchor, increment, matrix=None):
    """max_T |L_T(y; increment)| in the Frobenius norm.

    :param matrix: The constraint matrix of `y_anchor`, assembled when omitted.
    """
    if matrix is None:
        matrix = constraint_matrix(y_anchor)
    residual = matrix @ increment.get_vector()
    values = residual.reshape(-1, 3)
    return float(numpy.sqrt(values[:, 0] ** 2 + values[:, 1] ** 2
                            + 0.5 * values[:, 2] ** 2).max())


def gradient_estimate_check(y, metric):
    """Checks ||grad_h y||^2 <= sqrt(2) (D_h(y) + ||g||_L1).

    :returns: A dictionary with the two sides and the verdict.
    """
    space = y.get_space()
    lhs = float(space.integrate((y.gradients() ** 2).sum(axis=-1)).sum())
    rhs = float(numpy.sqrt(2.0) * (metric_defect(y, metric) + metric.l1_norm(space)))
    return dict(gradient_norm_sq=lhs, bound=rhs, holds=bool(lhs <= rhs * (1.0 + 1e-12)))
