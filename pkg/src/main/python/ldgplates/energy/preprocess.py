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

"""Preprocessing energies E_s, E_b, E_p = E_s + sigma E_b and their forms."""

import numpy
from scipy import sparse

from ldgplates.dg import dg_space
from ldgplates.dg import forms
from ldgplates.energy import bending
from ldgplates.energy import defect
from ldgplates.utils.math import tensor2


class PreprocessEnergy(object):
    """The energy driving the metric preprocessing flow.

    :param assembly: A :class:`~ldgplates.lifting.LiftingAssembly`.
    :param metric: The target :class:`~ldgplates.energy.metric.MetricField`.
    :param sigma: Weight of the bending part, nonnegative.
    :param dirichlet: Optional pair ``(phi, Phi)``; requires a skeleton with
      Dirichlet edges.
    """

    def __init__(self, assembly, metric, sigma, dirichlet=None):
        if sigma < 0.0:
            raise ValueError('sigma must be nonnegative: %g' % sigma)
        self._space = assembly.get_space()
        self._metric = metric
        self._sigma = float(sigma)
        self._bending = bending.BendingEnergy.bending_part(assembly, metric, dirichlet)
        self._gradients = self._space.gradient_matrices()

    def get_sigma(self):
        return self._sigma

    def get_metric(self):
        return self._metric

    def get_bending(self):
        return self._bending

    def _residual(self, y):
        if not self._space.is_compatible(y.get_space()):
            raise dg_space.SpaceMismatchError('Field does not live in %s' % self._space)
        g, _ = self._metric.at_quadrature(self._space)
        grads = y.gradients()
        return numpy.einsum('ceqa,ceqb->eqab', grads, grads) - g

    def stretching_energy(self, y):
        """E_s(y) = 1/2 int |grad y^T grad y - g|^2."""
        residual = self._residual(y)
        return 0.5 * float(self._space.integrate(tensor2.frobenius_norm(residual) ** 2))

    def energies(self, y):
        """Dictionary with ``E_s``, ``E_b`` and ``E_p``."""
        e_s = self.stretching_energy(y)
        e_b = self._bending.energy(y)
        return dict(E_s=e_s, E_b=e_b, E_p=e_s + self._sigma * e_b)

    def stretching_matrix(self, anchor):
        """Scalar matrix of a_s(z; u, v) = 2 sum_m int sum_ab S_ab d_a u_m d_b v_m.

        S = grad z^T grad z - g is evaluated at the anchor z.
        """
        residual = self._residual(anchor).reshape(-1, 2, 2)
        w = self._space.get_quadrature_weights().ravel()
        matrix = sparse.csr_matrix((self._space.get_num_dofs(),) * 2)
        for a in range(2):
            for b in range(2):
                weights = sparse.diags(2.0 * w * residual[:, a, b])
                matrix = matrix + self._gradients[b].T @ weights @ self._gradients[a]
        return matrix.tocsr()

    def forms(self, anchor, u, v):
        """Dictionary with ``a_s`` = a_s(anchor; u, v) and ``a_b`` = a_b(u, v)."""
        u.check_compatible(v)
        stretching = self.stretching_matrix(anchor)
        a_s = float(numpy.sum(v.get_coefficients() * (stretching @ u.get_coefficients().T).T))
        return dict(a_s=a_s, a_b=self._bending.bilinear(u, v))

    def gradient(self, y):
        """``(3, ndofs)`` coefficients of dE_p(y)."""
        stretching = self.stretching_matrix(y)
        result = (stretching @ y.get_coefficients().T).T
        if self._sigma > 0.0:
            result = result + self._sigma * (self._bending.apply(y)
                                              + self._bending.data_vector())
        return result

    def system_matrix(self, anchor):
        """Vector matrix of a_s(anchor; ., .) + sigma a_b(., .)."""
        matrix = self.stretching_matrix(anchor) + self._sigma * self._bending.matrix()
        return forms.replicate(matrix, bending.NUM_COMPONENTS)

    def __str__(self):
        return '%s[sigma=%g, metric=%s]' % (self.__class__.__name__, self._sigma,
                                            self._metric.get_name())


def energy_preprocess(sigma, assembly, metric, y, dirichlet=None):
    return PreprocessEnergy(assembly, metric, sigma, dirichlet).energies(y)


def forms_preprocess(sigma, assembly, metric, anchor, u, v, dirichlet=None):
    return PreprocessEnergy(assembly, metric, sigma, dirichlet).forms(anchor, u, v)


def defect_stretching_chain(y, metric):
    """D_h(y) <= ||grad y^T grad y - g||_L1 <= sqrt(|Omega|) (2 E_s)^1/2."""
    space = y.get_space()
    d_h = defect.metric_defect(y, metric)
    l1 = defect.stretching_residual_l1(y, metric)
    g, _ = metric.at_quadrature(space)
    grads = y.gradients()
    residual = numpy.einsum('ceqa,ceqb->eqab', grads, grads) - g
    l2 = float(numpy.sqrt(space.integrate(tensor2.frobenius_norm(residual) ** 2)))
    bound = float(numpy.sqrt(space.get_mesh().get_area()) * l2)
    slack = 1e-12 * (1.0 + bound)
    return dict(D_h=d_h, l1=l1, bound=bound, holds=bool(d_h <= l1 + slack and l1 <= bound + slack))
