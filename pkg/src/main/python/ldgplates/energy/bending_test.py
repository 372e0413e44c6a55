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

from ldgplates import dg
from ldgplates import energy
from ldgplates import lifting
from ldgplates import mesh
from ldgplates.utils import unittest

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))
CYLINDER_DOMAIN = ((0.0, 0.0), (numpy.pi, 1.0))


def _flat(x):
    return numpy.stack([x[:, 0], x[:, 1], numpy.zeros(len(x))], axis=-1)


def _cylinder(x):
    return numpy.stack([numpy.sin(x[:, 0]), x[:, 1], numpy.cos(x[:, 0])], axis=-1)


def _setup(n, kind=mesh.TRI, degree=2, corners=UNIT_SQUARE, dirichlet_sides=()):
    m = mesh.build_structured_mesh(corners, n, n, kind, dirichlet_sides)
    space = dg.DGSpace(m, degree)
    skeleton = dg.Skeleton(space, include_dirichlet=bool(dirichlet_sides))
    return space, lifting.LiftingAssembly(space, skeleton)


class EnergyParamsTest(unittest.TestCase):

    def test_coefficients(self):
        params = energy.EnergyParams(mu=3.0, lam=1.0)
        self.assert_almost_equal(0.25, params.get_frobenius_coefficient(), 15)
        self.assert_almost_equal(3.0 / 84.0, params.get_trace_coefficient(), 15)
        self.assert_equal(0.0, energy.EnergyParams().get_trace_coefficient())

    def test_validation(self):
        for kwargs in (dict(mu=0.0), dict(lam=-1.0), dict(gamma0=0.0), dict(gamma1=-1.0),
                       dict(boundary_mode='clamped'), dict(boundary_mode=mesh.DIRICHLET)):
            with self.assert_raises(ValueError):
                energy.EnergyParams(**kwargs)


class BendingEnergyTest(unittest.TestCase):

    def test_flat_isometry(self):
        for kind in (mesh.TRI, mesh.QUAD):
            for degree in (2, 3):
                space, assembly = _setup(3, kind, degree)
                y = space.interpolate(_flat)
                result = energy.energy_Eh(energy.EnergyParams(), assembly,
                                          energy.identity_metric(), y)
                self.assert_less(abs(result.total), 1e-12)
                self.assert_less(energy.metric_defect(y, energy.identity_metric()), 1e-12)

    def test_cylinder_limit(self):
        m = mesh.build_structured_mesh(CYLINDER_DOMAIN, 32, 16)
        space = dg.DGSpace(m, 2)
        assembly = lifting.LiftingAssembly(space)
        y = space.interpolate(_cylinder)
        metric = energy.identity_metric()
        result = energy.energy_Eh(energy.EnergyParams(mu=3.0, lam=0.0), assembly, metric, y)
        self.assert_allclose(result.total, numpy.pi / 4.0, rtol=1e-2)
        self.assert_equal(0.0, result.trace)
        result = energy.energy_Eh(energy.EnergyParams(mu=3.0, lam=1.0), assembly, metric, y)
        self.assert_allclose(result.total, 0.25 * (1.0 + 1.0 / 7.0) * numpy.pi, rtol=1e-2)

    def test_breakdown_sums_to_total(self):
        space, assembly = _setup(2)
        y = dg.dg_field.random_field(space, 3, numpy.random.default_rng(0))
        result = energy.energy_Eh(energy.EnergyParams(lam=2.0), assembly,
                                  energy.stretched_metric(0.5), y)
        parts = result.as_dict()
        self.assert_almost_equal(parts['total'], sum(
            parts[name] for name in energy.EnergyBreakdown.FIELDS), 10)
        self.assert_greater(result.value_jump, 0.0)

    def test_translation_invariance(self):
        space, assembly = _setup(3)
        bending = energy.BendingEnergy.from_params(energy.EnergyParams(lam=1.0), assembly,
                                                   energy.stretched_metric(1.0))
        y = dg.dg_field.random_field(space, 3, numpy.random.default_rng(1))
        self.assert_allclose(bending.energy(y.shift([1.0, -2.0, 3.0])), bending.energy(y),
                             rtol=1e-10)

    def test_quadratic_form_identity(self):
        space, assembly = _setup(3, mesh.QUAD)
        bending = energy.BendingEnergy.from_params(energy.EnergyParams(mu=2.0, lam=1.0),
                                                   assembly, energy.stretched_metric(2.0))
        rng = numpy.random.default_rng(2)
        y = dg.dg_field.random_field(space, 3, rng)
        v = dg.dg_field.random_field(space, 3, rng)
        self.assert_allclose(energy.form_ah(bending, y, y), 2.0 * bending.energy(y),
                             rtol=1e-10)
        self.assert_allclose(energy.form_ah(bending, y, v), energy.form_ah(bending, v, y),
                             rtol=1e-10)

    def test_directional_derivative_with_data(self):
        space, assembly = _setup(3, dirichlet_sides=('left', 'bottom'))

        def phi(x):
            return numpy.stack([x[:, 0], x[:, 1], 0.1 * x[:, 0] ** 2], axis=-1)

        def grad_phi(x):
            g = numpy.zeros((len(x), 3, 2))
            g[:, 0, 0] = 1.0
            g[:, 1, 1] = 1.0
            g[:, 2, 0] = 0.2 * x[:, 0]
            return g

        def forcing(x):
            return numpy.stack([numpy.ones(len(x)), x[:, 0], x[:, 1] ** 2], axis=-1)

        params = energy.EnergyParams(lam=1.0, forcing=forcing,
                                     boundary_mode=mesh.DIRICHLET,
                                     dirichlet_value=phi, dirichlet_gradient=grad_phi)
        bending = energy.BendingEnergy.from_params(params, assembly,
                                                   energy.stretched_metric(1.0))
        rng = numpy.random.default_rng(3)
        y = dg.dg_field.random_field(space, 3, rng)
        v = dg.dg_field.random_field(space, 3, rng)
        eps = 1e-4
        central = (bending.energy(y + v * eps) - bending.energy(y - v * eps)) / (2.0 * eps)
        derivative = bending.derivative(y, v)
        self.assert_less(abs(central - derivative), 1e-7 * abs(derivative))

    def test_dirichlet_data_vanishes_for_matching_field(self):
        space, assembly = _setup(2, dirichlet_sides=('left',))
        params = energy.EnergyParams(boundary_mode=mesh.DIRICHLET, dirichlet_value=_flat,
                                     dirichlet_gradient=lambda x: numpy.broadcast_to(
                                         numpy.eye(3, 2), (len(x), 3, 2)))
        result = energy.energy_Eh(params, assembly, energy.identity_metric(),
                                  space.interpolate(_flat))
        self.assert_less(abs(result.total), 1e-12)

    def test_skeleton_must_match_mode(self):
        space, assembly = _setup(2)
        params = energy.EnergyParams(boundary_mode=mesh.DIRICHLET, dirichlet_value=_flat,
                                     dirichlet_gradient=_flat)
        with self.assert_raises(energy.Error):
            energy.BendingEnergy.from_params(params, assembly, energy.identity_metric())

    def test_non_spd_metric(self):
        space, assembly = _setup(2)
        with self.assert_raises(energy.NonSPDMetricError):
            energy.BendingEnergy.from_params(energy.EnergyParams(), assembly,
                                             energy.expression_metric('1', '2', '1'))

    def test_forcing_must_have_zero_mean(self):
        space, assembly = _setup(2)

        def balanced(x):
            return numpy.stack([x[:, 0] - 0.5,
                                numpy.zeros(len(x)), x[:, 1] - 0.5], axis=-1)

        energy.BendingEnergy.from_params(energy.EnergyParams(forcing=balanced), assembly,
                                         energy.identity_metric())
        with self.assert_raises(energy.Error):
            energy.BendingEnergy.from_params(
                energy.EnergyParams(forcing=lambda x: numpy.ones((len(x), 3))), assembly,
                energy.identity_metric())


class CoercivityTest(unittest.TestCase):

    def test_lower_bound_is_stable(self):
        lower = []
        for n in (4, 8):
            _, assembly = _setup(n)
            bending = energy.BendingEnergy.from_params(energy.EnergyParams(), assembly,
                                                       energy.identity_metric())
            result = energy.coercivity_check(bending, 30, seed=4)
            self.assert_greater(result['lower_observed'], 0.0)
            self.assert_less_equal(result['lower_observed'], result['upper_observed'])
            lower.append(result['lower_observed'])
        self.assert_less(max(lower) / min(lower), 2.0)

    def test_gradient_estimate(self):
        space, _ = _setup(4)
        metric = energy.identity_metric()
        for y in (space.interpolate(_cylinder),
                  dg.dg_field.random_field(space, 3, numpy.random.default_rng(5))):
            result = energy.gradient_estimate_check(y, metric)
            self.assert_true(result['holds'])


if __name__ == '__main__':
    unittest.main()
