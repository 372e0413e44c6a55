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

import io
import math

import numpy

from ldgplates import mesh
from ldgplates.utils import unittest

UNIT_SQUARE = ((0.0, 0.0), (1.0, 1.0))


def _brute_force_interior_edges(m):
    counts = {}
    for element in m.get_elements():
        n = len(element)
        for i in range(n):
            key = tuple(sorted((int(element[i]), int(element[(i + 1) % n]))))
            counts[key] = counts.get(key, 0) + 1
    return sum(1 for c in counts.values() if c == 2), sum(1 for c in counts.values() if c == 1)


class StructuredMeshTest(unittest.TestCase):

    def test_single_quad(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 1, 1, mesh.QUAD)
        self.assert_equal(1, m.get_num_elements())
        self.assert_equal(4, len(m.get_boundary_edges()))
        self.assert_equal(0, len(m.get_interior_edges()))

    def test_single_cell_triangles(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 1, 1, mesh.TRI)
        self.assert_equal(2, m.get_num_elements())
        self.assert_equal(1, len(m.get_interior_edges()))
        self.assert_equal(4, len(m.get_boundary_edges()))
        # Diagonal from the lower-left to the upper-right corner.
        a, b = m.get_edge_vertices()[m.get_interior_edges()[0]]
        self.assert_equal({0, 3}, {int(a), int(b)})

    def test_two_by_two_triangles(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2, mesh.TRI)
        self.assert_equal(8, m.get_num_elements())
        self.assert_equal(8, len(m.get_interior_edges()))
        self.assert_equal(_brute_force_interior_edges(m),
                          (len(m.get_interior_edges()), len(m.get_boundary_edges())))

    def test_degenerate_rectangle(self):
        self.assert_raises(mesh.Error, mesh.build_structured_mesh,
                           ((0.0, 0.0), (0.0, 1.0)), 2, 2)
        self.assert_raises(mesh.Error, mesh.build_structured_mesh, UNIT_SQUARE, 0, 2)

    def test_dirichlet_sides(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 3, 2, mesh.TRI, ('left', 'top'))
        self.assert_equal(5, len(m.get_boundary_edges(mesh.DIRICHLET)))
        self.assert_equal(5, len(m.get_boundary_edges(mesh.FREE)))
        self.assert_true(m.has_dirichlet_edges())

    def test_parse_structured_spec(self):
        m = mesh.parse_structured_spec('0,0,2,1:4,2:quad:dirichlet=left+right')
        self.assert_equal(8, m.get_num_elements())
        self.assert_equal(4, len(m.get_boundary_edges(mesh.DIRICHLET)))
        self.assert_almost_equal(2.0, m.get_area(), 12)
        self.assert_raises(mesh.Error, mesh.parse_structured_spec, '0,0,1:2,2:tri')
        self.assert_raises(mesh.Error, mesh.parse_structured_spec, '0,0,1,1:2,2:hex')


class MeshInvariantsTest(unittest.TestCase):

    def test_area_sums_to_domain(self):
        for kind in (mesh.TRI, mesh.QUAD):
            m = mesh.build_structured_mesh(((0.0, 0.0), (math.pi, 1.0)), 5, 3, kind)
            self.assert_less(abs(m.get_area() - math.pi) / math.pi, 1e-12)

    def test_bi_affine_area_matches_shoelace(self):
        vertices = [(0.0, 0.0), (2.0, 0.0), (1.5, 1.2), (0.2, 1.0)]
        m = mesh.Mesh(vertices, [(0, 1, 2, 3)], mesh.QUAD)
        x = numpy.array(vertices)
        shoelace = 0.5 * abs(numpy.dot(x[:, 0], numpy.roll(x[:, 1], -1))
                             - numpy.dot(x[:, 1], numpy.roll(x[:, 0], -1)))
        self.assert_almost_equal(shoelace, m.get_area(), 13)

    def test_edge_normal_consistency(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 3, 3, mesh.TRI)
        coords = m.get_vertices()
        for i in m.get_interior_edges():
            minus, plus = m.get_edge_elements()[i]
            self.assert_less(minus, plus)
            n = m.get_edge_normals()[i]
            midpoint = coords[m.get_edge_vertices()[i]].mean(axis=0)
            to_minus = coords[m.get_elements()[minus]].mean(axis=0) - midpoint
            to_plus = coords[m.get_elements()[plus]].mean(axis=0) - midpoint
            self.assert_less(numpy.dot(n, to_minus), 0.0)
            self.assert_greater(numpy.dot(n, to_plus), 0.0)
            self.assert_almost_equal(1.0, numpy.linalg.norm(n), 14)

    def test_boundary_normals_point_outwards(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2, mesh.QUAD)
        center = numpy.array([0.5, 0.5])
        for i in m.get_boundary_edges():
            midpoint = m.get_vertices()[m.get_edge_vertices()[i]].mean(axis=0)
            self.assert_greater(numpy.dot(m.get_edge_normals()[i], midpoint - center), 0.0)

    def test_edge_lengths_bounded_by_diameters(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 3, 2, mesh.TRI)
        h = m.get_element_diameters()
        for i in range(m.get_num_edges()):
            elements = [e for e in m.get_edge_elements()[i] if e >= 0]
            self.assert_less_equal(m.get_edge_lengths()[i], h[elements].min() + 1e-15)

    def test_nonconforming_edge_rejected(self):
        vertices = [(0, 0), (1, 0), (0, 1), (1, 1), (0, -1)]
        elements = [(0, 1, 2), (1, 3, 2), (0, 4, 1), (2, 1, 3)]
        self.assert_raises(mesh.Error, mesh.Mesh, vertices, elements, mesh.TRI)

    def test_clockwise_element_rejected(self):
        self.assert_raises(mesh.DegenerateElementError, mesh.Mesh,
                           [(0, 0), (0, 1), (1, 0)], [(0, 1, 2)], mesh.TRI)

    def test_collinear_element_rejected(self):
        self.assert_raises(mesh.DegenerateElementError, mesh.Mesh,
                           [(0, 0), (1, 0), (2, 0)], [(0, 1, 2)], mesh.TRI)

    def test_nonconvex_quad_rejected(self):
        vertices = [(0, 0), (2, 0), (0.5, 0.5), (0, 2)]
        self.assert_raises(mesh.DegenerateElementError, mesh.Mesh, vertices,
                           [(0, 1, 2, 3)], mesh.QUAD)

    def test_vertex_out_of_range(self):
        self.assert_raises(mesh.Error, mesh.Mesh, [(0, 0), (1, 0)], [(0, 1, 2)])

    def test_label_on_interior_edge_rejected(self):
        vertices = [(0, 0), (1, 0), (1, 1), (0, 1)]
        self.assert_raises(mesh.Error, mesh.Mesh, vertices, [(0, 1, 2), (0, 2, 3)],
                           mesh.TRI, {(0, 2): mesh.DIRICHLET})

    def test_element_map_second_derivative(self):
        vertices = [(0.0, 0.0), (2.0, 0.0), (1.5, 1.2), (0.2, 1.0)]
        m = mesh.Mesh(vertices, [(0, 1, 2, 3)], mesh.QUAD)
        element_map = m.get_element_map(0)
        self.assert_false(element_map.is_affine())
        d2 = element_map.second_derivative([[0.3, 0.4]])[0]
        mixed = numpy.array([0.0 - 2.0 + 1.5 - 0.2, 0.0 - 0.0 + 1.2 - 1.0])
        self.assert_allclose(d2[:, 0, 1], mixed)
        self.assert_allclose(d2[:, 0, 0], 0.0)
        ref = numpy.array([[0.25, 0.75], [0.6, 0.1]])
        self.assert_allclose(element_map.inverse(element_map(ref)), ref, atol=1e-13)
        self.assert_raises(IndexError, m.get_element_map, 1)


class ShapeRegularityTest(unittest.TestCase):

    def test_right_triangles(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 4, 4, mesh.TRI)
        report = mesh.shape_regularity_report(m)
        a = 0.25
        rho = 2.0 * (0.5 * a * a) / (2.0 * a + a * math.sqrt(2.0))
        self.assert_almost_equal(a * math.sqrt(2.0) / rho, report['max_ratio'], 12)
        self.assert_almost_equal(2.0 + 2.0 * math.sqrt(2.0), report['max_ratio'], 12)
        self.assert_almost_equal(a * a, report['min_det'], 14)

    def test_square_elements(self):
        m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 2, mesh.QUAD)
        report = mesh.shape_regularity_report(m)
        self.assert_almost_equal(math.sqrt(2.0) * (2.0 + math.sqrt(2.0)),
                                 report['max_ratio'], 12)

    def test_refinement(self):
        for kind in (mesh.TRI, mesh.QUAD):
            m = mesh.build_structured_mesh(UNIT_SQUARE, 2, 3, kind, ('bottom',))
            fine = mesh.refine_uniformly(m)
            self.assert_equal(4 * m.get_num_elements(), fine.get_num_elements())
            self.assert_almost_equal(0.5 * m.get_h_max(), fine.get_h_max(), 14)
            self.assert_almost_equal(mesh.shape_regularity_report(m)['max_ratio'],
                                     mesh.shape_regularity_report(fine)['max_ratio'], 10)
            self.assert_equal(2 * len(m.get_boundary_edges(mesh.DIRICHLET)),
                              len(fine.get_boundary_edges(mesh.DIRICHLET)))
            self.assert_almost_equal(m.get_area(), fine.get_area(), 13)


class MeshFormatTest(unittest.TestCase):

    def test_single_quad_file(self):
        data = ('ldgmesh v1 quad\nvertices 4\n0 0\n1 0\n1 1\n0 1\n'
                'elements 1\n0 1 2 3\nboundary 1\n0 1 dirichlet\n')
        m = mesh.load_mesh(io.StringIO(data))
        self.assert_equal(1, m.get_num_elements())
        self.assert_equal(1, len(m.get_boundary_edges(mesh.DIRICHLET)))

    def test_index_out_of_range_names_line(self):
        data = ('ldgmesh v1 tri\nvertices 3\n0 0\n1 0\n0 1\n'
                'elements 1\n0 1 7\n')
        try:
            mesh.load_mesh(io.StringIO(data))
        except mesh.ldgmesh.DecodeError as e:
            self.assert_equal(7, e.line_number)
            self.assert_in('line 7', str(e))
        else:
            self.fail('DecodeError not raised')

    def test_degenerate_element_names_line(self):
        data = ('ldgmesh v1 tri\nvertices 4\n0 0\n1 0\n2 0\n0 1\n'
                'elements 2\n0 1 3\n0 1 2\n')
        with self.assert_raises(mesh.ldgmesh.DecodeError) as context:
            mesh.load_mesh(io.StringIO(data))
        self.assert_equal(9, context.exception.line_number)

    def test_bad_header(self):
        self.assert_raises(mesh.ldgmesh.DecodeError, mesh.load_mesh,
                           io.StringIO('ldgmesh v2 tri\nvertices 0\n'))
        self.assert_raises(mesh.ldgmesh.DecodeError, mesh.load_mesh, io.StringIO(''))

    def test_round_trip(self):
        m = mesh.build_structured_mesh(((0.0, 0.0), (1.0 / 3.0, 0.7)), 2, 2, mesh.TRI,
                                       ('left',))
        stream = io.StringIO()
        mesh.save_mesh(stream, m)
        loaded = mesh.load_mesh(io.StringIO(stream.getvalue()))
        self.assert_array_equal(m.get_vertices(), loaded.get_vertices())
        self.assert_array_equal(m.get_elements(), loaded.get_elements())
        self.assert_equal(m.get_boundary_labels(), loaded.get_boundary_labels())


if __name__ == '__main__':
    unittest.main()
