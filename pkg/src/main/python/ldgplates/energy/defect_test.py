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
from ldgplates.energy import defect
from ldgplates.utils import unittest

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))


def _linear(a, b):
    def function(x):
        return numpy.stack([a * x[:, 0], b * x[:, 1], numpy.zeros(len(x))], axis=-1)
    return function


def _cylinder(x):
    return numpy.stack([numpy.sin(x[:, 0]), x[:, 1], numpy.cos(x[:, 0])], axis=-1)


def _rotation(angle_x, angle_z):
    cx, sx = numpy.cos(angle_x), numpy.sin(angle_x)
    cz, sz = numpy.cos(angle_z), numpy.sin(angle_z)
    rx = numpy.array([[1.0, 0.0, 0.0], [0.0, cx, -sx], [0.0, sx, cx]])
    rz = numpy.array([[cz, -sz, 0.0], [sz, cz, 0.0], [0.0, 0.0, 1.0]])
    return rz.dot(rx)


class MetricDefectTest(unittest.TestCase):

    def test_flat_isometry(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 3, 3), 2)
        y = space.interpolate(_linear(1.0, 1.0))
        self.assert_less(energy.metric_defect(y, energy.identity_metric()), 1e-13)

    def test_stretched_plane(self):
        for kind, n in ((mesh.TRI, 3), (mesh.QUAD, 2)):
            space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, n, n, kind), 2)
            y = space.interpolate(_linear(2.0, 1.0))
            self.assert_allclose(energy.metric_defect(y, energy.identity_metric()), 3.0,
                                 rtol=1e-12)
            self.assert_allclose(energy.defect_density(y, energy.identity_metric()),
                                 3.0 * space.get_mesh().get_element_areas(), rtol=1e-12)

    def test_invariance(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 3, 3), 2)
        metric = energy.stretched_metric(1.0)
        y = dg.dg_field.random_field(space, 3, numpy.random.default_rng(0))
        reference = energy.metric_defect(y, metric)
        self.assert_allclose(energy.metric_defect(y.shift([3.0, 1.0, -2.0]), metric),
                             reference, rtol=1e-12)
        self.assert_allclose(energy.metric_defect(y.transform(_rotation(0.3, 1.1)), metric),
                             reference, rtol=1e-12)

    def test_interpolant_rate(self):
        defects, hs = [], []
        for n in (4, 8, 16):
            m = mesh.build_structured_mesh(UNIT_SQUARE, n, n)
            space = dg.DGSpace(m, 2)
            defects.append(energy.metric_defect(space.interpolate(_cylinder),
                                                energy.identity_metric()))
            hs.append(m.get_h_max())
        for level in range(1, 3):
            rate = numpy.log(defects[level - 1] / defects[level]) / numpy.log(
                hs[level - 1] / hs[level])
            self.assert_greater_equal(rate, 0.9)


class ConstraintFormTest(unittest.TestCase):

    def setup(self):
        self.space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 2, 2), 2)
        ne = self.space.get_mesh().get_num_elements()
        self.identity = numpy.tile(numpy.eye(2), (ne, 1, 1))
        self.anchor = self.space.interpolate(_linear(1.0, 1.0))

    def test_constant_increment(self):
        v = self.space.interpolate(lambda x: numpy.ones((len(x), 3)))
        rng = numpy.random.default_rng(1)
        mu = rng.standard_normal((len(self.identity), 2, 2))
        mu = mu + numpy.swapaxes(mu, 1, 2)
        self.assert_less(abs(energy.form_bh(self.anchor, v, mu)), 1e-13)

    def test_hand_values(self):
        v = self.space.interpolate(_linear(1.0, -1.0))
        self.assert_less(abs(energy.form_bh(self.anchor, v, self.identity)), 1e-13)
        self.assert_allclose(energy.form_bh(self.anchor, self.anchor, self.identity), 4.0,
                             rtol=1e-13)

    def test_matrix_matches_form(self):
        rng = numpy.random.default_rng(2)
        anchor = dg.dg_field.random_field(self.space, 3, rng)
        v = dg.dg_field.random_field(self.space, 3, rng)
        mu = rng.standard_normal((len(self.identity), 2, 2))
        mu = mu + numpy.swapaxes(mu, 1, 2)
        matrix = energy.constraint_matrix(anchor)
        self.assert_equal((3 * len(mu), 3 * self.space.get_num_dofs()), matrix.shape)
        self.assert_allclose(defect.multiplier_vector(mu).dot(matrix @ v.get_vector()),
                             energy.form_bh(anchor, v, mu), rtol=1e-11)
        self.assert_allclose(defect.multiplier_tensor(defect.multiplier_vector(mu)), mu)

    def test_asymmetric_multiplier(self):
        mu = self.identity.copy()
        mu[3, 0, 1] = 1.0
        with self.assert_raises(ValueError):
            energy.form_bh(self.anchor, self.anchor, mu)


if __name__ == '__main__':
    unittest.main()
