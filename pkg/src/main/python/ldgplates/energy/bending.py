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

"""Quadratic bending energies built on the reconstructed Hessian.

Every energy handled here has the form

  E(y) = sum_m int c1 |G H_h(y_m) G|^2 + c2 tr(G H_h(y_m) G)^2
         + gamma1/2 ||h^-1/2 [grad y]||^2 + gamma0/2 ||h^-3/2 [y]||^2 - int f . y

with G = g^-1/2 and jumps taken on the active skeleton of the lifting
assembly. It is quadratic in y, so it is stored as E(y) = 1/2 y^T K y +
d^T y - F^T y + const with one scalar matrix K shared by the three
components. Pointwise, |G H G|^2 = vec(H)^T kron(G^2, G^2) vec(H) and
tr(G H G) = vec(G^2) . vec(H).
"""

import timeit

import numpy
from scipy import sparse

from ldgplates import mesh as mesh_lib
from ldgplates.dg import dg_space
from ldgplates.dg import forms
from ldgplates.energy import metric as metric_lib
from ldgplates.lifting import TENSOR_INDICES
from ldgplates.utils import logging
from ldgplates.utils.math import tensor2

NUM_COMPONENTS = 3


class Error(metric_lib.Error):
    pass


class EnergyParams(object):
    """Material, stabilization, forcing and boundary parameters of E_h.

    :param mu: Lame parameter, positive.
    :param lam: Lame parameter, nonnegative.
    :param gamma0: Value-jump stabilization, positive.
    :param gamma1: Gradient-jump stabilization, positive.
    :param forcing: Optional callable ``(N, 2) -> (N, 3)``.
    :param boundary_mode: :data:`~ldgplates.mesh.FREE` or
      :data:`~ldgplates.mesh.DIRICHLET`.
    :param dirichlet_value: Callable ``(N, 2) -> (N, 3)`` giving phi.
    :param dirichlet_gradient: Callable ``(N, 2) -> (N, 3, 2)`` giving Phi.
    """

    def __init__(self, mu=1.0, lam=0.0, gamma0=1.0, gamma1=1.0, forcing=None,
                 boundary_mode=mesh_lib.FREE, dirichlet_value=None,
                 dirichlet_gradient=None):
        if mu <= 0.0:
            raise ValueError('mu must be positive: %g' % mu)
        if lam < 0.0:
            raise ValueError('lambda must be nonnegative: %g' % lam)
        if gamma0 <= 0.0 or gamma1 <= 0.0:
            raise ValueError('Stabilization parameters must be positive: %g, %g'
                             % (gamma0, gamma1))
        if boundary_mode not in (mesh_lib.FREE, mesh_lib.DIRICHLET):
            raise ValueError('Unknown boundary mode: %s' % boundary_mode)
        if boundary_mode == mesh_lib.DIRICHLET and (dirichlet_value is None or
                                                    dirichlet_gradient is None):
            raise ValueError('Dirichlet mode needs both phi and Phi')
        self.mu = mu
        self.lam = lam
        self.gamma0 = gamma0
        self.gamma1 = gamma1
        self.forcing = forcing
        self.boundary_mode = boundary_mode
        self.dirichlet_value = dirichlet_value
        self.dirichlet_gradient = dirichlet_gradient

    def get_frobenius_coefficient(self):
        return self.mu / 12.0

    def get_trace_coefficient(self):
        return self.mu * self.lam / (12.0 * (2.0 * self.mu + self.lam))

    def is_dirichlet(self):
        return self.boundary_mode == mesh_lib.DIRICHLET

    def get_dirichlet_data(self):
        if not self.is_dirichlet():
            return None
        return self.dirichlet_value, self.dirichlet_gradient

    def __str__(self):
        return '%s[mu=%g, lambda=%g, gamma0=%g, gamma1=%g, mode=%s]' % (
            self.__class__.__name__, self.mu, self.lam, self.gamma0, self.gamma1,
            self.boundary_mode)


class EnergyBreakdown(object):
    """Parts of a bending energy; `total` is their sum."""

    FIELDS = ('frobenius', 'trace', 'gradient_jump', 'value_jump', 'forcing')

    def __init__(self, frobenius=0.0, trace=0.0, gradient_jump=0.0, value_jump=0.0,
                 forcing=0.0):
        self.frobenius = float(frobenius)
        self.trace = float(trace)
        self.gradient_jump = float(gradient_jump)
        self.value_jump = float(value_jump)
        self.forcing = float(forcing)

    @property
    def total(self):
        return (self.frobenius + self.trace + self.gradient_jump + self.value_jump
                + self.forcing)

    def as_dict(self):
        result = dict((name, getattr(self, name)) for name in self.FIELDS)
        result['total'] = self.total
        return result

    def __str__(self):
        return '%s[%s]' % (self.__class__.__name__, ', '.join(
            '%s=%g' % item for item in sorted(self.as_dict().items())))


class BendingEnergy(object):
    """Assembled quadratic form of a bending energy.

    :param assembly: A :class:`~ldgplates.lifting.LiftingAssembly`; its
      skeleton decides which edges carry jump penalties.
    :param metric: A :class:`~ldgplates.energy.metric.MetricField`.
    :param frobenius_coefficient: c1.
    :param trace_coefficient: c2.
    :param dirichlet: Optional pair ``(phi, Phi)`` of boundary data callables.
    """

    def __init__(self, assembly, metric, frobenius_coefficient, trace_coefficient,
                 gamma0, gamma1, forcing=None, dirichlet=None):
        start = timeit.default_timer()
        self._assembly = assembly
        self._space = assembly.get_space()
        self._skeleton = assembly.get_skeleton()
        self._metric = metric
        self._c1 = float(frobenius_coefficient)
        self._c2 = float(trace_coefficient)
        self._gamma0 = float(gamma0)
        self._gamma1 = float(gamma1)
        self._forcing = forcing
        if dirichlet is not None and not self._skeleton.includes_dirichlet():
            raise Error('Dirichlet data needs a skeleton with Dirichlet edges')
        if dirichlet is None and self._skeleton.includes_dirichlet():
            raise Error('Skeleton has Dirichlet edges but no data was given')
        self._value_data = self._grad_data = None
        if dirichlet is not None:
            self._value_data, self._grad_data = self._skeleton.dirichlet_jump_data(
                dirichlet[0], dirichlet[1], NUM_COMPONENTS)
        self._assemble()
        logging.debug('Assembled %s in %f second(s)', self, timeit.default_timer() - start)

    @classmethod
    def from_params(cls, params, assembly, metric):
        """The energy E_h with c1 = mu/12 and c2 = mu lambda / (12(2mu + lambda))."""
        return cls(assembly, metric, params.get_frobenius_coefficient(),
                   params.get_trace_coefficient(), params.gamma0, params.gamma1,
                   params.forcing, params.get_dirichlet_data())

    @classmethod
    def bending_part(cls, assembly, metric, dirichlet=None):
        """The bending part E_b of the preprocessing energy."""
        return cls(assembly, metric, 0.5, 0.0, 1.0, 1.0, None, dirichlet)

    @classmethod
    def bilaplacian(cls, assembly, gamma0, gamma1, dirichlet=None, forcing=None):
        """Half of the form c_h: identity metric, c1 = 1/2, c2 = 0."""
        return cls(assembly, metric_lib.identity_metric(), 0.5, 0.0, gamma0, gamma1,
                   forcing, dirichlet)

    def _pointwise_weights(self):
        """``(4, 4, N)`` matrices W with E = sum int vec(H)^T W vec(H)."""
        _, root = self._metric.at_quadrature(self._space)
        a = numpy.einsum('eqij,eqjk->eqik', root, root).reshape(-1, 2, 2)
        vec_a = a.reshape(-1, 4)
        w = (self._c1 * numpy.einsum('nik,njl->nijkl', a, a).reshape(-1, 4, 4)
             + self._c2 * numpy.einsum('na,nb->nab', vec_a, vec_a))
        weights = self._space.get_quadrature_weights().ravel()
        return numpy.transpose(w, (1, 2, 0)) * weights[None, None, :]

    def _assemble(self):
        ops = self._assembly.hessian_operators()
        stacked = sparse.vstack([ops[i][j] for i, j in TENSOR_INDICES]).tocsr()
        w = self._pointwise_weights()
        weight_matrix = sparse.bmat([[sparse.diags(w[a, b]) for b in range(4)]
                                     for a in range(4)]).tocsr()
        self._stacked = stacked
        self._weight_matrix = weight_matrix
        trace_ops = self._skeleton.operators()
        edge_w = self._skeleton.get_weights()
        h = self._skeleton.get_h()
        grad_weights = sparse.diags(self._gamma1 * edge_w / h)
        value_weights = sparse.diags(self._gamma0 * edge_w / h ** 3)
        matrix = 2.0 * (stacked.T @ weight_matrix @ stacked)
        for i in range(2):
            matrix = matrix + trace_ops.jump_grad[i].T @ grad_weights @ trace_ops.jump_grad[i]
        matrix = matrix + trace_ops.jump_value.T @ value_weights @ trace_ops.jump_value
        self._matrix = matrix.tocsr()
        ndofs = self._space.get_num_dofs()
        self._data = numpy.zeros((NUM_COMPONENTS, ndofs))
        hessian_data = self._assembly.hessian_data(self._value_data, self._grad_data)
        for m in range(NUM_COMPONENTS):
            if hessian_data is not None:
                h_data = numpy.concatenate([hessian_data[m, i, j] for i, j in TENSOR_INDICES])
                self._data[m] += 2.0 * (stacked.T @ (weight_matrix @ h_data))
            if self._grad_data is not None:
                for i in range(2):
                    self._data[m] += trace_ops.jump_grad[i].T @ (
                        grad_weights @ self._grad_data[m, i])
            if self._value_data is not None:
                self._data[m] += trace_ops.jump_value.T @ (value_weights @ self._value_data[m])
        self._load = numpy.zeros((NUM_COMPONENTS, ndofs))
        if self._forcing is not None:
            points = self._space.get_quadrature_points().reshape(-1, 2)
            f = numpy.asarray(self._forcing(points), dtype=float).reshape(-1, NUM_COMPONENTS)
            values = self._space.value_matrix()
            weights = self._space.get_quadrature_weights().ravel()
            self._load = (values.T @ (weights[:, None] * f)).T
            self._check_forcing(f, weights)

    def _check_forcing(self, f, weights):
        if self._skeleton.includes_dirichlet():
            return
        total = weights.dot(f)
        scale = 1e-10 * self._space.get_mesh().get_area() * abs(f).max()
        if (abs(total) > scale).any():
            raise Error('Free boundary forcing must have zero mean: %s' % total.tolist())

    def get_assembly(self):
        return self._assembly

    def get_metric(self):
        return self._metric

    def get_coefficients(self):
        return self._c1, self._c2, self._gamma0, self._gamma1

    def get_jump_data(self):
        return self._value_data, self._grad_data

    def matrix(self):
        """Scalar matrix K; the vector operator is K replicated per component."""
        return self._matrix

    def system_matrix(self):
        return forms.replicate(self._matrix, NUM_COMPONENTS)

    def data_vector(self):
        """``(3, ndofs)`` linear term d from boundary data."""
        return self._data

    def load_vector(self):
        """``(3, ndofs)`` load F with F . y = int f . y."""
        return self._load

    def _check_field(self, y):
        if not self._space.is_compatible(y.get_space()):
            raise dg_space.SpaceMismatchError('Field does not live in %s' % self._space)
        if y.get_num_components() != NUM_COMPONENTS:
            raise dg_space.SpaceMismatchError('Expected %d components, got %d'
                                              % (NUM_COMPONENTS, y.get_num_components()))

    def _scaled_hessians(self, y):
        """G H_h(y_m) G at the quadrature points, ``(3, e, q, 2, 2)``."""
        self._check_field(y)
        hessian = self._assembly.discrete_hessian(y, self._value_data,
                                                  self._grad_data).get_values()
        _, root = self._metric.at_quadrature(self._space)
        return numpy.einsum('eqij,ceqjk,eqkl->ceqil', root, hessian, root)

    def breakdown(self, y):
        """Evaluates every part of the energy at `y` from pointwise values."""
        ghg = self._scaled_hessians(y)
        frobenius = self._c1 * self._space.integrate((ghg ** 2).sum(axis=(-2, -1))).sum()
        trace = self._c2 * self._space.integrate(tensor2.trace(ghg) ** 2).sum()
        gradient_jump = 0.5 * self._gamma1 * forms.jump_gradient_norm(
            self._skeleton, y, self._grad_data) ** 2
        value_jump = 0.5 * self._gamma0 * forms.jump_value_norm(
            self._skeleton, y, self._value_data) ** 2
        forcing = -numpy.sum(self._load * y.get_coefficients())
        return EnergyBreakdown(frobenius, trace, gradient_jump, value_jump, forcing)

    def energy(self, y):
        return self.breakdown(y).total

    def density(self, y):
        """Per element bending density int_T c1 |GHG|^2 + c2 tr(GHG)^2."""
        ghg = self._scaled_hessians(y)
        pointwise = (self._c1 * (ghg ** 2).sum(axis=(-2, -1))
                     + self._c2 * tensor2.trace(ghg) ** 2).sum(axis=0)
        return numpy.einsum('eq,eq->e', pointwise, self._space.get_quadrature_weights())

    def apply(self, y):
        """``(3, ndofs)`` coefficients of K y."""
        return (self._matrix @ y.get_coefficients().T).T

    def gradient(self, y):
        """``(3, ndofs)`` coefficients of the derivative K y + d - F."""
        self._check_field(y)
        return self.apply(y) + self._data - self._load

    def bilinear(self, u, v):
        """The symmetric form v^T K u summed over components."""
        self._check_field(u)
        self._check_field(v)
        return float(numpy.sum(v.get_coefficients() * self.apply(u)))

    def derivative(self, y, v):
        """Directional derivative dE(y)(v)."""
        self._check_field(v)
        return float(numpy.sum(v.get_coefficients() * self.gradient(y)))

    def __str__(self):
        return '%s[c1=%g, c2=%g, gamma0=%g, gamma1=%g, metric=%s]' % (
            self.__class__.__name__, self._c1, self._c2, self._gamma0, self._gamma1,
            self._metric.get_name())


def energy_Eh(params, assembly, metric, y):
    """Breakdown of E_h(y) for the given parameters."""
    return BendingEnergy.from_params(params, assembly, metric).breakdown(y)


def form_ah(energy, y, v):
    """a_h(y, v), the bilinear part of dE_h(y)(v)."""
    return energy.bilinear(y, v)
