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
from ldgplates import mesh
from ldgplates.utils import unittest


def _space(corners, n=4):
    return dg.DGSpace(mesh.build_structured_mesh(corners, n, n), 2)


class ContinuousEnergyCheckTest(unittest.TestCase):

    def test_cylinder(self):
        space = _space(((0.0, 0.0), (numpy.pi, 1.0)))
        result = energy.continuous_energy_check(energy.get_immersion('cylinder'),
                                                energy.get_metric('cylinder'), 3.0, 0.0, space)
        self.assert_allclose(result['E_via_II'], result['E_via_Hessian'], rtol=1e-10)
        self.assert_allclose(result['E_via_Hessian'], numpy.pi / 4.0, rtol=1e-10)
        self.assert_less_equal(result['f1_residual'], 1e-10)
        self.assert_less_equal(result['f2_residual'], 1e-10)

    def test_cylinder_with_trace_term(self):
        space = _space(((0.0, 0.0), (numpy.pi, 1.0)))
        result = energy.continuous_energy_check(energy.get_immersion('cylinder'),
                                                energy.identity_metric(), 3.0, 1.0, space)
        self.assert_allclose(result['E_via_II'], 0.25 * (1.0 + 1.0 / 7.0) * numpy.pi,
                             rtol=1e-10)

    def test_plane(self):
        space = _space(((0.0, 0.0), (1.0, 1.0)), 2)
        result = energy.continuous_energy_check(energy.get_immersion('plane'),
                                                energy.identity_metric(), 1.0, 1.0, space)
        self.assert_equal(0.0, result['E_via_II'])
        self.assert_equal(0.0, result['E_via_Hessian'])

    def test_catenoid_residuals_are_nonnegative(self):
        space = _space(((-1.0, 0.0), (1.0, 2.0)))
        immersion = energy.get_immersion('catenoid')
        result = energy.continuous_energy_check(immersion, immersion.metric_field(), 1.0,
                                                1.0, space)
        self.assert_greater_equal(result['f1_min'], -1e-10)
        self.assert_greater_equal(result['f2_min'], -1e-10)
        self.assert_greater(result['f1_residual'], 1e-3)
        self.assert_greater_equal(result['E_via_Hessian'], result['E_via_II'])

    def test_inadmissible_immersion(self):
        space = _space(((0.0, 0.0), (1.0, 1.0)), 2)
        with self.assert_raises(energy.Error):
            energy.continuous_energy_check(energy.get_immersion('cylinder'),
                                           energy.stretched_metric(1.0), 1.0, 0.0, space)


class CatalogTest(unittest.TestCase):

    def test_catenoid_metric(self):
        points = numpy.array([[0.0, 0.3], [0.7, 1.2], [-0.4, 2.0]])
        g = energy.get_metric('catenoid')(points)
        expected = numpy.cosh(points[:, 0])[:, None, None] ** 2 * numpy.eye(2)
        self.assert_allclose(g, expected, rtol=1e-12)

    def test_immersion_realizes_metric(self):
        points = numpy.array([[0.1, 0.2], [1.0, -0.5]])
        for name in ('plane', 'cylinder', 'catenoid'):
            immersion = energy.get_immersion(name)
            self.assert_allclose(immersion.first_fundamental_form(points),
                                 immersion.metric_field()(points), atol=1e-12)

    def test_inverse_square_root(self):
        metric = energy.expression_metric('2 + x1', '0.3*x2', '1 + x2^2')
        points = numpy.random.default_rng(0).random((20, 2))
        root = metric.inverse_sqrt(points)
        self.assert_allclose(root @ root @ metric(points),
                             numpy.broadcast_to(numpy.eye(2), (20, 2, 2)), atol=1e-12)
        self.assert_allclose(metric.sqrt_det(points),
                             numpy.sqrt(numpy.linalg.det(metric(points))), rtol=1e-12)

    def test_non_spd_point(self):
        metric = energy.expression_metric('x1 - 0.5', '0', '1')
        with self.assert_raises(energy.NonSPDMetricError) as context:
            metric(numpy.array([[1.0, 0.0], [0.25, 0.5]]))
        self.assert_allclose(context.exception.point, [0.25, 0.5])

    def test_stretched_metric(self):
        metric = energy.get_metric('stretched', 2.0)
        g = metric(numpy.array([[0.3, 0.5]]))
        self.assert_allclose(g[0], [[1.5, 0.0], [0.0, 1.0]])
        self.assert_false(metric.has_immersion())
        self.assert_allclose(metric.gradient(numpy.array([[0.3, 0.5]]))[0, 0, 0], [0.0, 2.0])

    def test_unknown_names(self):
        with self.assert_raises(energy.Error):
            energy.get_metric('sphere')
        with self.assert_raises(energy.Error):
            energy.get_immersion('torus')


if __name__ == '__main__':
    unittest.main()
