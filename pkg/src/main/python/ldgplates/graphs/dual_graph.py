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

import networkx as nx

from ldgplates.mesh import mesh as mesh_lib


class DualGraph(nx.Graph):
    """Element adjacency graph of a mesh.

    Nodes are element indices; an edge joins two elements that share a mesh
    edge and stores that mesh edge's index under ``edge``.
    """

    def __init__(self, mesh=None):
        nx.Graph.__init__(self)
        self._mesh = None
        if mesh is not None:
            self.build(mesh)

    def build(self, mesh):
        if not isinstance(mesh, mesh_lib.Mesh):
            raise TypeError('mesh must be a Mesh: %s' % type(mesh))
        self._mesh = mesh
        self.add_nodes_from(range(mesh.get_num_elements()))
        elements = mesh.get_edge_elements()
        for i in mesh.get_interior_edges():
            self.add_edge(int(elements[i, 0]), int(elements[i, 1]), edge=int(i))

    def get_mesh(self):
        return self._mesh

    def is_connected(self):
        return nx.is_connected(self)

    def get_components(self):
        """Returns the element sets of the connected components, sorted by
        their smallest element."""
        return sorted((sorted(c) for c in nx.connected_components(self)),
                      key=lambda c: c[0])

    def get_neighbors(self, element):
        return sorted(self.neighbors(element))
