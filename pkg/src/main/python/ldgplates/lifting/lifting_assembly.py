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

"""Lifting operators R_h, B_h and the reconstructed Hessian H_h.

For an active edge e with normal n_e the local liftings solve

  (r_e(phi), tau) = int_e {tau} n_e . phi,
  (b_e(phi), tau) = int_e {div tau} . n_e phi

for every broken tensor tau of degree l1 (resp. l2), and

  H_h(v) = D^2_h v - R_h([grad_h v]) + B_h([v]).

Tensor components are ordered (11, 12, 21, 22). Everything is assembled as
sparse matrices acting on scalar coefficient vectors; vector fields apply
them componentwise.
"""

import timeit

import numpy
from scipy import sparse

from ldgplates import dg
from ldgplates.dg import dg_space
from ldgplates.utils import logging

TENSOR_INDICES = ((0, 0), (0, 1), (1, 0), (1, 1))


class Error(Exception):
    pass


class LiftingAssembly(object):
    """Sparse realization of R_h, B_h and H_h on a host space.

    :param space: Host :class:`~ldgplates.dg.DGSpace`.
    :param skeleton: Active :class:`~ldgplates.dg.Skeleton` of `space`;
      interior edges when omitted.
    :param r_degree: Degree l1 of the R_h tensors (default: host degree).
    :param b_degree: Degree l2 of the B_h tensors (default: host degree).
    """

    def __init__(self, space, skeleton=None, r_degree=None, b_degree=None):
        start = timeit.default_timer()
        self._space = space
        if skeleton is None:
            skeleton = dg.Skeleton(space)
        if skeleton.get_space() is not space:
            raise dg_space.SpaceMismatchError('Skeleton belongs to another space')
        self._skeleton = skeleton
        k = space.get_degree()
        r_degree = k if r_degree is None else r_degree
        b_degree = k if b_degree is None else b_degree
        self._r_space = self._tensor_space(r_degree)
        if b_degree == r_degree:
            self._b_space = self._r_space
        else:
            self._b_space = self._tensor_space(b_degree)
        self._assemble()
        logging.debug('Assembled %s in %f second(s)', self, timeit.default_timer() - start)

    def _tensor_space(self, degree):
        quadrature_degree, edge_degree = self._space.get_quadrature_degrees()
        return dg.DGSpace(self._space.get_mesh(), degree, quadrature_degree,
                          edge_degree, min_degree=0)

    @staticmethod
    def _inverse_mass(space):
        blocks = space.local_mass_matrices()
        scale = numpy.abs(blocks).max(axis=(1, 2))
        if (numpy.linalg.cond(blocks) * numpy.finfo(float).eps > 1e-2).any():
            raise Error('Singular local mass matrix')
        inverses = numpy.linalg.inv(blocks / scale[:, None, None]) / scale[:, None, None]
        return dg_space.block_diagonal(inverses)

    def _assemble(self):
        sk = self._skeleton
        w = sk.get_weights()
        normals = sk.get_normals()
        host = sk.operators(self._space)
        r_ops = sk.operators(self._r_space)
        b_ops = sk.operators(self._b_space)
        r_minv = self._inverse_mass(self._r_space)
        b_minv = self._inverse_mass(self._b_space)
        # Maps from edge point data to lifting coefficients.
        self._r_data_maps = [
            (r_minv @ r_ops.average_value.T @ sparse.diags(w * normals[:, j])).tocsr()
            for j in range(2)]
        self._b_data_maps = [[
            (b_minv @ b_ops.average_grad[j].T @ sparse.diags(w * normals[:, i])).tocsr()
            for j in range(2)] for i in range(2)]
        self._jump_value = host.jump_value
        self._jump_grad = host.jump_grad
        self._r_eval = self._r_space.value_matrix()
        self._b_eval = self._b_space.value_matrix()
        d2 = self._space.hessian_matrices()
        self._r_ops = [[(self._r_data_maps[j] @ self._jump_grad[i]).tocsr()
                        for j in range(2)] for i in range(2)]
        self._b_ops = [[(self._b_data_maps[i][j] @ self._jump_value).tocsr()
                        for j in range(2)] for i in range(2)]
        self._hessian_ops = [[(d2[i][j] - self._r_eval @ self._r_ops[i][j]
                               + self._b_eval @ self._b_ops[i][j]).tocsr()
                              for j in range(2)] for i in range(2)]

    def get_space(self):
        return self._space

    def get_skeleton(self):
        return self._skeleton

    def get_r_space(self):
        return self._r_space

    def get_b_space(self):
        return self._b_space

    def hessian_operators(self):
        """``[[H11, H12], [H21, H22]]`` maps from dofs to values at quadrature points."""
        return self._hessian_ops

    def hessian_data(self, value_data=None, grad_data=None):
        """Affine part of H_h contributed by Dirichlet jump data.

        :param value_data: ``(c, P)`` data part of [v] on the skeleton.
        :param grad_data: ``(c, 2, P)`` data part of [grad v].
        :returns: ``(c, 2, 2, num_elements * nq)`` array, or ``None`` without data.
        """
        if value_data is None and grad_data is None:
            return None
        c = len(value_data if value_data is not None else grad_data)
        out = numpy.zeros((c, 2, 2, self._r_eval.shape[0]))
        for m in range(c):
            for i, j in TENSOR_INDICES:
                if grad_data is not None:
                    out[m, i, j] -= self._r_eval @ (self._r_data_maps[j] @ grad_data[m, i])
                if value_data is not None:
                    out[m, i, j] += self._b_eval @ (self._b_data_maps[i][j] @ value_data[m])
        return out

    def _check_field(self, field):
        if not self._space.is_compatible(field.get_space()):
            raise dg_space.SpaceMismatchError('Field does not live in %s' % self._space)

    def lift_r(self, field, grad_data=None):
        """R_h([grad_h v]) as a tensor field with 4 components per component of v."""
        self._check_field(field)
        coefficients = []
        for m, c in enumerate(field.get_coefficients()):
            for i, j in TENSOR_INDICES:
                coef = self._r_ops[i][j] @ c
                if grad_data is not None:
                    coef = coef + self._r_data_maps[j] @ grad_data[m, i]
                coefficients.append(coef)
        return dg.DGField(self._r_space, numpy.array(coefficients))

    def lift_b(self, field, value_data=None):
        """B_h([v]) as a tensor field with 4 components per component of v."""
        self._check_field(field)
        coefficients = []
        for m, c in enumerate(field.get_coefficients()):
            for i, j in TENSOR_INDICES:
                coef = self._b_ops[i][j] @ c
                if value_data is not None:
                    coef = coef + self._b_data_maps[i][j] @ value_data[m]
                coefficients.append(coef)
        return dg.DGField(self._b_space, numpy.array(coefficients))

    def discrete_hessian(self, field, value_data=None, grad_data=None):
        """H_h(v) at the element quadrature points."""
        self._check_field(field)
        coefficients = field.get_coefficients()
        ne = self._space.get_mesh().get_num_elements()
        nq = len(self._space.get_element_rule())
        values = numpy.empty((len(coefficients), 2, 2, ne * nq))
        for i, j in TENSOR_INDICES:
            values[:, i, j] = (self._hessian_ops[i][j] @ coefficients.T).T
        data = self.hessian_data(value_data, grad_data)
        if data is not None:
            values += data
        values = numpy.moveaxis(values.reshape(len(coefficients), 2, 2, ne, nq), (1, 2),
                                (3, 4))
        return DiscreteHessianField(self._space, values)

    def __str__(self):
        return '%s[l1=%d, l2=%d, edges=%d]' % (
            self.__class__.__name__, self._r_space.get_degree(),
            self._b_space.get_degree(), self._skeleton.get_num_edges())


class DiscreteHessianField(object):
    """Values of H_h(v) with shape ``(c, num_elements, nq, 2, 2)``."""

    def __init__(self, space, values):
        self._space = space
        self._values = values

    def get_space(self):
        return self._space

    def get_values(self):
        return self._values

    def l2_norm(self):
        return float(numpy.sqrt(self._space.integrate(
            (self._values ** 2).sum(axis=(-2, -1))).sum()))

    def l2_distance(self, exact):
        """Distance to a callable mapping ``(N, 2)`` points to ``(N, c, 2, 2)``."""
        points = self._space.get_quadrature_points()
        target = numpy.asarray(exact(points.reshape(-1, 2)), dtype=float)
        target = numpy.moveaxis(target.reshape(points.shape[:2] + self._values.shape[:1]
                                               + (2, 2)), 2, 0)
        diff = self._values - target
        return float(numpy.sqrt(self._space.integrate((diff ** 2).sum(axis=(-2, -1))).sum()))

    def pair(self, tensor):
        """Integral of H_h(v) : tensor for a callable ``(N, 2) -> (N, 2, 2)``."""
        points = self._space.get_quadrature_points()
        t = numpy.asarray(tensor(points.reshape(-1, 2)), dtype=float).reshape(
            points.shape[:2] + (2, 2))
        return self._space.integrate(numpy.einsum('ceqij,eqij->ceq', self._values, t))

    def __add__(self, other):
        return DiscreteHessianField(self._space, self._values + other.get_values())

    def __mul__(self, scalar):
        return DiscreteHessianField(self._space, self._values * scalar)

    __rmul__ = __mul__
