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
from ldgplates.dg import inequalities
from ldgplates.utils import unittest
from ldgplates.utils.math import quadrature

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))


def _brute_force_h2_semi(space, u, v):
    """Independent quadrature loop over elements and interior edges."""
    m = space.get_mesh()
    rule = quadrature.element_rule(space.get_reference_element().get_shape(), 8)
    total = 0.0
    for e in range(m.get_num_elements()):
        element_map = m.get_element_map(e)
        dets = numpy.linalg.det(element_map.jacobian(rule.get_points()))
        hu = u.evaluate(e, rule.get_points())[2][0]
        hv = v.evaluate(e, rule.get_points())[2][0]
        total += numpy.sum(rule.get_weights() * dets * (hu * hv).sum(axis=(1, 2)))
    t, w = quadrature.gauss_legendre(6)
    for edge in m.get_interior_edges():
        a, b = m.get_vertices()[m.get_edge_vertices()[edge]]
        length = numpy.linalg.norm(b - a)
        points = a[None, :] + t[:, None] * (b - a)[None, :]
        traces = []
        for element in m.get_edge_elements()[edge]:
            ref = m.get_element_map(element).inverse(points)
            traces.append((u.evaluate(element, ref), v.evaluate(element, ref)))
        (u_minus, v_minus), (u_plus, v_plus) = traces
        ju = u_minus[0][0] - u_plus[0][0]
        jv = v_minus[0][0] - v_plus[0][0]
        jgu = u_minus[1][0] - u_plus[1][0]
        jgv = v_minus[1][0] - v_plus[1][0]
        total += numpy.sum(w * length * ((jgu * jgv).sum(axis=1) / length
                                         + ju * jv / length ** 3))
    return total


class H2InnerTest(unittest.TestCase):

    def test_constant_kernel(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2)
        space = dg.DGSpace(m, 2)
        c = space.interpolate(lambda x: numpy.full(len(x), 2.0))
        self.assert_less(abs(forms.h2_inner(space, c, c, forms.SEMI)), 1e-10)
        self.assert_almost_equal(4.0, forms.h2_inner(space, c, c, forms.FULL), 10)

    def test_single_element(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 1, 1, mesh.QUAD)
        space = dg.DGSpace(m, 2)
        v = space.interpolate(lambda x: x[:, 0] ** 2)
        self.assert_almost_equal(4.0, forms.h2_inner(space, v, v), 10)

    def test_symmetry_and_brute_force(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2)
        space = dg.DGSpace(m, 2)
        rng = numpy.random.default_rng(3)
        u = dg.dg_field.random_field(space, rng=rng)
        v = dg.dg_field.random_field(space, rng=rng)
        uv = forms.h2_inner(space, u, v)
        self.assert_allclose(uv, forms.h2_inner(space, v, u), rtol=1e-12)
        self.assert_allclose(_brute_force_h2_semi(space, u, v), uv, rtol=1e-10)

    def test_full_gram_is_positive_definite(self):
        for kind in (mesh.TRI, mesh.QUAD):
            space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 2, 2, kind), 2)
            gram = forms.h2_gram(space, forms.FULL).toarray()
            self.assert_allclose(gram, gram.T, atol=1e-9 * abs(gram).max())
            self.assert_greater(numpy.linalg.eigvalsh(gram).min(), 0.0)

    def test_semi_kernel_is_affine(self):
        # Affine functions have zero broken Hessian and zero jumps.
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 2, 2), 2)
        gram = forms.h2_gram(space, forms.SEMI).toarray()
        eigenvalues, eigenvectors = numpy.linalg.eigh(gram)
        kernel = eigenvectors[:, eigenvalues <= 1e-10 * eigenvalues.max()]
        self.assert_equal(3, kernel.shape[1])
        affine = numpy.column_stack([
            space.interpolate(f).get_vector() for f in
            (lambda x: numpy.ones(len(x)), lambda x: x[:, 0], lambda x: x[:, 1])])
        residual = affine - kernel.dot(kernel.T.dot(affine))
        self.assert_less(abs(residual).max(), 1e-8)
        rng = numpy.random.default_rng(2)
        sample = dg.DGField(space, kernel.dot(rng.standard_normal(3)))
        self.assert_allclose(0.0, sample.hessians(), atol=1e-7)

    def test_dirichlet_edges_remove_kernel(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2, mesh.TRI, ('left',))
        space = dg.DGSpace(m, 2)
        skeleton = dg.Skeleton(space, include_dirichlet=True)
        gram = forms.h2_gram(space, forms.SEMI, skeleton).toarray()
        self.assert_greater(numpy.linalg.eigvalsh(gram).min(), 0.0)


class SkeletonTest(unittest.TestCase):

    def test_jump_average_identity(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 3, 3), 2)
        skeleton = dg.Skeleton(space)
        rng = numpy.random.default_rng(5)
        u = dg.dg_field.random_field(space, rng=rng)
        v = dg.dg_field.random_field(space, rng=rng)
        tu, tv = skeleton.trace_data(u), skeleton.trace_data(v)
        product_jump = tu.value_minus * tv.value_minus - tu.value_plus * tv.value_plus
        self.assert_allclose(product_jump, tu.jump * tv.average + tu.average * tv.jump,
                             atol=1e-12 * (1.0 + abs(product_jump).max()))

    def test_traces_match_evaluation(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 1, mesh.QUAD)
        space = dg.DGSpace(m, 3)
        skeleton = dg.Skeleton(space)
        field = space.interpolate(lambda x: numpy.sin(x[:, 0]) * numpy.exp(x[:, 1]))
        traces = skeleton.trace_data(field)
        minus, plus = m.get_edge_elements()[skeleton.get_edges()[0]]
        nq = skeleton.get_points_per_edge()
        points = skeleton.get_points()[:nq]
        ref = m.get_element_map(minus).inverse(points)
        self.assert_allclose(field.evaluate(minus, ref)[0][0], traces.value_minus[0][:nq],
                             atol=1e-12)
        ref = m.get_element_map(plus).inverse(points)
        self.assert_allclose(field.evaluate(plus, ref)[1][0], traces.grad_plus[0][:nq],
                             atol=1e-11)

    def test_dirichlet_jumps(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2, mesh.TRI, ('bottom',))
        space = dg.DGSpace(m, 2)
        skeleton = dg.Skeleton(space, include_dirichlet=True)
        self.assert_equal(len(m.get_interior_edges()) + 2, skeleton.get_num_edges())
        field = space.interpolate(lambda x: x[:, 0] + x[:, 1] ** 2)
        value_data, grad_data = skeleton.dirichlet_jump_data(
            lambda x: (x[:, 0] + x[:, 1] ** 2)[:, None],
            lambda x: numpy.stack([numpy.ones(len(x)), 2.0 * x[:, 1]], axis=-1)[:, None, :],
            num_components=1)
        traces = skeleton.trace_data(field, value_data, grad_data)
        self.assert_allclose(0.0, traces.jump, atol=1e-12)
        self.assert_allclose(0.0, traces.jump_grad, atol=1e-10)
        boundary = skeleton.get_boundary_mask()
        self.assert_allclose(traces.value_minus[:, boundary], traces.average[:, boundary])


class InequalitiesTest(unittest.TestCase):

    def test_constant_field(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 2, 2), 2)
        c = space.interpolate(lambda x: numpy.ones(len(x)))
        self.assert_almost_equal(0.0, inequalities.poincare_ratio(dg.Skeleton(space), c), 10)

    def test_linear_field(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 4, 4), 2)
        v = space.interpolate(lambda x: x[:, 0])
        self.assert_almost_equal(1.0 / math.sqrt(12.0),
                                 inequalities.poincare_ratio(dg.Skeleton(space), v), 10)

    def test_ratios_stable_under_refinement(self):
        reports = []
        for n in (4, 8, 16):
            space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, n, n), 2)
            reports.append(inequalities.functional_inequality_check(space, 100, seed=11))
        for key in ('poincare_ratio_max', 'sobolev_ratio_max', 'grad_bound_ratio_max'):
            values = [report[key] for report in reports]
            self.assert_greater(min(values), 0.0)
            self.assert_less(max(values) / min(values), 1.5)

    def test_invalid_samples(self):
        space = dg.DGSpace(mesh.build_structured_mesh(UNIT_SQUARE, 1, 1), 2)
        self.assert_raises(ValueError, inequalities.functional_inequality_check, space, 0)


if __name__ == '__main__':
    unittest.main()
