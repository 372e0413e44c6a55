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

import math

import numpy

from ldgplates import dg
from ldgplates import mesh
from ldgplates.dg import forms
from ldgplates.utils import unittest

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))


def _skewed_quad():
    return mesh.Mesh([[0.0, 0.0], [2.0, 0.0], [1.5, 1.2], [0.2, 1.0]], [[0, 1, 2, 3]],
                     mesh.QUAD)


def _l2_error(field, exact):
    space = field.get_space()
    points = space.get_quadrature_points()
    diff = field.values()[0] - exact(points.reshape(-1, 2)).reshape(points.shape[:2])
    return math.sqrt(space.integrate(diff ** 2))


class ReferenceElementTest(unittest.TestCase):

    def test_local_dimensions(self):
        for k in range(0, 5):
            self.assert_equal((k + 1) * (k + 2) // 2,
                              dg.ReferenceElement(mesh.TRI, k).get_num_functions())
            self.assert_equal((k + 1) ** 2,
                              dg.ReferenceElement(mesh.QUAD, k).get_num_functions())

    def test_nodal_basis(self):
        for kind in (mesh.TRI, mesh.QUAD):
            element = dg.ReferenceElement(kind, 3)
            values = element.values(element.get_nodes())
            self.assert_allclose(numpy.eye(element.get_num_functions()), values,
                                 atol=1e-12)

    def test_partition_of_unity(self):
        element = dg.ReferenceElement(mesh.TRI, 2)
        ref = numpy.array([[0.1, 0.2], [0.5, 0.25]])
        self.assert_allclose(1.0, element.values(ref).sum(axis=1), rtol=1e-12)
        self.assert_allclose(0.0, element.gradients(ref).sum(axis=1), atol=1e-11)
        self.assert_allclose(0.0, element.hessians(ref).sum(axis=1), atol=1e-10)

    def test_invalid_degree(self):
        self.assert_raises(ValueError, dg.ReferenceElement, mesh.TRI, 5)
        self.assert_raises(ValueError, dg.ReferenceElement, 'hex', 2)


class DGSpaceTest(unittest.TestCase):

    def test_degree_range(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 1, 1)
        self.assert_raises(ValueError, dg.DGSpace, m, 1)
        self.assert_raises(ValueError, dg.DGSpace, m, 5)
        self.assert_equal(2 * 6, dg.DGSpace(m, 2).get_num_dofs())

    def test_quadrature_exactness(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2)
        space = dg.DGSpace(m, 3)
        self.assert_greater_equal(space.get_element_rule().get_degree(), 6)
        self.assert_greater_equal(space.get_edge_rule().get_degree(), 7)
        self.assert_almost_equal(1.0, space.get_quadrature_weights().sum(), 12)

    def test_quadratic_reproduction(self):
        for kind in (mesh.TRI, mesh.QUAD):
            m = mesh.build_structured_mesh(UNIT_SQUARE, 3, 2, kind)
            space = dg.DGSpace(m, 2)
            field = space.interpolate(lambda x: x[:, 0] ** 2)
            hessians = field.hessians()[0]
            expected = numpy.zeros_like(hessians)
            expected[..., 0, 0] = 2.0
            self.assert_allclose(expected, hessians, atol=1e-10)
            self.assert_less(_l2_error(field, lambda x: x[:, 0] ** 2), 1e-13)

    def test_constant_field(self):
        space = dg.DGSpace(_skewed_quad(), 2)
        field = space.interpolate(lambda x: numpy.full(len(x), 3.0))
        values, grads, hessians = field.evaluate(0, numpy.array([[0.3, 0.6], [0.9, 0.1]]))
        self.assert_allclose(3.0, values, rtol=1e-12)
        self.assert_allclose(0.0, grads, atol=1e-11)
        self.assert_allclose(0.0, hessians, atol=1e-10)

    def test_bilinear_map_hessian(self):
        m = _skewed_quad()
        self.assert_false(m.get_element_map(0).is_affine())
        space = dg.DGSpace(m, 2)
        field = space.interpolate(lambda x: x[:, 0] * x[:, 1])
        ref = space.get_element_rule().get_points()
        _, _, hessians = field.evaluate(0, ref)
        self.assert_allclose(numpy.broadcast_to([[0.0, 1.0], [1.0, 0.0]],
                                                hessians[0].shape),
                             hessians[0], atol=1e-9)
        # Central differences of the evaluated gradient in physical coordinates.
        element_map = m.get_element_map(0)
        step = 1e-5
        for xi in ref[:3]:
            x = element_map(xi)[0]
            for i in range(2):
                dx = numpy.zeros(2)
                dx[i] = step
                plus = element_map.inverse(x + dx)
                minus = element_map.inverse(x - dx)
                g_plus = field.evaluate(0, plus)[1][0, 0]
                g_minus = field.evaluate(0, minus)[1][0, 0]
                fd = (g_plus - g_minus) / (2.0 * step)
                exact = field.evaluate(0, xi[None, :])[2][0, 0, i]
                self.assert_allclose(exact, fd, atol=1e-6)

    def test_element_index_out_of_range(self):
        space = dg.DGSpace(_skewed_quad(), 2)
        field = dg.DGField(space)
        self.assert_raises(IndexError, field.evaluate, 1, numpy.array([[0.5, 0.5]]))

    def test_linear_interpolant_is_continuous(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 4, 4)
        space = dg.DGSpace(m, 2)
        field = space.interpolate(lambda x: x[:, 0] + 2.0 * x[:, 1])
        skeleton = dg.Skeleton(space)
        self.assert_less(forms.jump_l2_norm(skeleton, field), 1e-13)
        self.assert_less(forms.jump_gradient_norm(skeleton, field), 1e-11)

    def test_interpolation_rate(self):
        def exact(x):
            return numpy.sin(math.pi * x[:, 0]) * numpy.sin(math.pi * x[:, 1])
        errors = []
        for n in (4, 8, 16):
            space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, n, n), 2)
            errors.append(_l2_error(space.interpolate(exact), exact))
        for coarse, fine in zip(errors, errors[1:]):
            self.assert_greater_equal(math.log(coarse / fine, 2), 2.7)

    def test_vector_interpolation(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 2, 2), 2)
        field = space.interpolate(lambda x: numpy.column_stack([x[:, 0], x[:, 1],
                                                                0.0 * x[:, 0]]))
        self.assert_equal(3, field.get_num_components())
        self.assert_allclose([0.5, 0.5, 0.0], field.mean(), atol=1e-14)
        self.assert_raises(dg.Error, space.interpolate, lambda x: x, 3)

    def test_space_mismatch(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2)
        u = dg.DGField(dg.DGSpace(m, 2))
        v = dg.DGField(dg.DGSpace(m, 3))
        self.assert_raises(dg.SpaceMismatchError, lambda: u + v)
        w = dg.DGField(dg.DGSpace(m, 2), num_components=3)
        self.assert_raises(dg.SpaceMismatchError, lambda: u - w)


if __name__ == '__main__':
    unittest.main()
