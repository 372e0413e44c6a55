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
from ldgplates.utils import logging

COMMENT = '#'


class DecodeError(mesh_lib.Error):

    def __init__(self, line_number, message):
        mesh_lib.Error.__init__(self, 'line %d: %s' % (line_number, message))
        self.line_number = line_number


class Decoder(object):
    """Decodes a mesh in the native text format.

    :param filename_or_stream: A filename, an open text stream or ``None``.
    """

    def __init__(self, filename_or_stream=None):
        self._kind = None
        self._vertices = []
        self._elements = []
        self._element_lines = []
        self._labels = {}
        self._mesh = None
        if filename_or_stream is not None:
            self.decode(filename_or_stream)

    def decode(self, filename_or_stream):
        '''Parses a file or stream and builds the mesh.

        :raises: :exc:`DecodeError`, :exc:`TypeError`
        '''
        if isinstance(filename_or_stream, str):
            with io.open(filename_or_stream, 'r', encoding='utf-8') as stream:
                data = stream.read()
        elif hasattr(filename_or_stream, 'read'):
            data = filename_or_stream.read()
        else:
            raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))
        if isinstance(data, bytes):
            data = data.decode('utf-8')
        return self.decode_from_string(data)

    def decode_from_string(self, data):
        if not isinstance(data, str):
            raise TypeError('data must be a string: %s' % type(data))
        lines = [(i + 1, line.strip()) for i, line in enumerate(data.splitlines())]
        lines = [(n, line) for n, line in lines if line and not line.startswith(COMMENT)]
        if not lines:
            raise DecodeError(1, 'empty mesh file')
        cursor = self._decode_header(lines, 0)
        cursor = self._decode_section(lines, cursor, 'vertices', self._decode_vertex)
        cursor = self._decode_section(lines, cursor, 'elements', self._decode_element)
        if cursor < len(lines):
            cursor = self._decode_section(lines, cursor, 'boundary',
                                          self._decode_boundary_edge)
        if cursor < len(lines):
            n, line = lines[cursor]
            raise DecodeError(n, 'unexpected content: %s' % line)
        self._build_mesh(lines[-1][0])
        return self._mesh

    def _decode_header(self, lines, cursor):
        n, line = lines[cursor]
        fields = line.split()
        if len(fields) != 3 or fields[0] != 'ldgmesh':
            raise DecodeError(n, 'expected header "ldgmesh v1 <tri|quad>"')
        if fields[1] != 'v1':
            raise DecodeError(n, 'unsupported version: %s' % fields[1])
        if fields[2] not in mesh_lib.ELEMENT_KINDS:
            raise DecodeError(n, 'unknown element kind: %s' % fields[2])
        self._kind = fields[2]
        return cursor + 1

    def _decode_section(self, lines, cursor, name, decode_entry):
        if cursor >= len(lines):
            raise DecodeError(lines[-1][0], 'missing section "%s"' % name)
        n, line = lines[cursor]
        fields = line.split()
        if len(fields) != 2 or fields[0] != name:
            raise DecodeError(n, 'expected "%s <count>"' % name)
        try:
            count = int(fields[1])
        except ValueError:
            raise DecodeError(n, 'invalid %s count: %s' % (name, fields[1]))
        if count < 0 or cursor + count > len(lines) - 1:
            raise DecodeError(n, 'section "%s" announces %d entries but the file ends'
                              % (name, count))
        for n, line in lines[cursor + 1:cursor + 1 + count]:
            decode_entry(n, line.split())
        return cursor + 1 + count

    def _decode_vertex(self, n, fields):
        if len(fields) != 2:
            raise DecodeError(n, 'expected "x y"')
        try:
            self._vertices.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise DecodeError(n, 'invalid coordinate')

    def _parse_index(self, n, token):
        try:
            index = int(token)
        except ValueError:
            raise DecodeError(n, 'invalid vertex index: %s' % token)
        if not 0 <= index < len(self._vertices):
            raise DecodeError(n, 'vertex index %d out of range [0, %d)'
                              % (index, len(self._vertices)))
        return index

    def _decode_element(self, n, fields):
        arity = 3 if self._kind == mesh_lib.TRI else 4
        if len(fields) != arity:
            raise DecodeError(n, 'expected %d vertex indices' % arity)
        self._elements.append([self._parse_index(n, token) for token in fields])
        self._element_lines.append(n)

    def _decode_boundary_edge(self, n, fields):
        if len(fields) != 3:
            raise DecodeError(n, 'expected "v0 v1 <free|dirichlet>"')
        a, b = self._parse_index(n, fields[0]), self._parse_index(n, fields[1])
        label = fields[2].lower()
        if label not in mesh_lib.BOUNDARY_LABELS:
            raise DecodeError(n, 'unknown boundary label: %s' % fields[2])
        self._labels[(a, b)] = (label, n)

    def _build_mesh(self, last_line):
        try:
            mesh = mesh_lib.Mesh(self._vertices, self._elements, self._kind)
        except (mesh_lib.DegenerateElementError, mesh_lib.NonconformingError) as e:
            raise DecodeError(self._element_lines[e.element], str(e))
        except mesh_lib.Error as e:
            raise DecodeError(last_line, str(e))
        labels = {}
        for (a, b), (label, n) in sorted(self._labels.items(), key=lambda x: x[1][1]):
            try:
                edge = mesh.get_edge_index(a, b)
            except KeyError:
                raise DecodeError(n, 'edge (%d, %d) is not an edge of the mesh' % (a, b))
            if not mesh.is_boundary_edge()[edge]:
                raise DecodeError(n, 'edge (%d, %d) is an interior edge' % (a, b))
            labels[(a, b)] = label
        self._mesh = mesh_lib.Mesh(self._vertices, self._elements, self._kind, labels)
        logging.debug('Decoded %s', self._mesh)

    def get_mesh(self):
        return self._mesh
