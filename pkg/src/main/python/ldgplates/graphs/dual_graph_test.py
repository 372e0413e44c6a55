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

from ldgplates import mesh
from ldgplates.graphs import dual_graph
from ldgplates.utils import unittest


class DualGraphTest(unittest.TestCase):

    def test_structured_mesh_is_connected(self):
        m = mesh.build_structured_mesh(((0, 0), (1, 1)), 2, 2, mesh.TRI)
        graph = dual_graph.DualGraph(m)
        self.assert_equal(8, graph.number_of_nodes())
        self.assert_equal(8, graph.number_of_edges())
        self.assert_true(graph.is_connected())

    def test_edge_attribute_names_mesh_edge(self):
        m = mesh.build_structured_mesh(((0, 0), (1, 1)), 1, 1, mesh.TRI)
        graph = dual_graph.DualGraph(m)
        self.assert_equal([1], graph.get_neighbors(0))
        edge = graph.edges[0, 1]['edge']
        self.assert_list_equal([0, 1], list(m.get_edge_elements()[edge]))

    def test_disconnected_components(self):
        vertices = [(0, 0), (1, 0), (0, 1), (2, 0), (3, 0), (2, 1)]
        m = mesh.Mesh(vertices, [(0, 1, 2), (3, 4, 5)], mesh.TRI)
        graph = dual_graph.DualGraph(m)
        self.assert_false(graph.is_connected())
        self.assert_equal([[0], [1]], graph.get_components())

    def test_rejects_non_mesh(self):
        self.assert_raises(TypeError, dual_graph.DualGraph, [1, 2])


if __name__ == '__main__':
    unittest.main()
