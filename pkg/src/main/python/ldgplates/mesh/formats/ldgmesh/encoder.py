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

from ldgplates.mesh import mesh as mesh_lib


class Encoder(object):
    """Encodes a mesh into the native text format.

    Coordinates are written with 17 significant digits so that decoding
    reproduces them bit for bit.

    :param filename_or_stream: A filename or a text stream.
    """

    def __init__(self, filename_or_stream, mesh=None):
        self._stream = None
        self._owns_stream = False
        if isinstance(filename_or_stream, str):
            self._stream = io.open(filename_or_stream, 'w', encoding='utf-8')
            self._owns_stream = True
        elif hasattr(filename_or_stream, 'write'):
            self._stream = filename_or_stream
        else:
            raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))
        if mesh is not None:
            self.encode(mesh)

    def encode(self, mesh):
        if not isinstance(mesh, mesh_lib.Mesh):
            raise TypeError('mesh must be a Mesh: %s' % type(mesh))
        write = self._stream.write
        write('ldgmesh v1 %s\n' % mesh.get_kind())
        write('vertices %d\n' % mesh.get_num_vertices())
        for x, y in mesh.get_vertices():
            write('%.17g %.17g\n' % (x, y))
        write('elements %d\n' % mesh.get_num_elements())
        for element in mesh.get_elements():
            write(' '.join('%d' % v for v in element) + '\n')
        labels = mesh.get_edge_labels()
        boundary = mesh.get_boundary_edges()
        write('boundary %d\n' % len(boundary))
        for i in boundary:
            a, b = mesh.get_edge_vertices()[i]
            write('%d %d %s\n' % (a, b, labels[i]))
        if self._owns_stream:
            self._stream.close()
