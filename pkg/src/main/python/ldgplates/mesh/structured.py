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

"""Structured meshes of rectangles and uniform refinement."""

import numpy

from ldgplates.mesh import mesh as mesh_lib

SIDES = ('left', 'right', 'bottom', 'top')


def build_structured_mesh(corners, nx, ny, kind=mesh_lib.TRI, dirichlet_sides=()):
    """Builds a uniform mesh of the rectangle spanned by two corner points.

    Triangular meshes split every cell along the diagonal from its lower-left
    to its upper-right corner.

    :param corners: Pair of points ``((x0, y0), (x1, y1))``.
    :param nx: Number of cells along x.
    :param ny: Number of cells along y.
    :param kind: Element kind, :data:`~ldgplates.mesh.mesh.TRI` or
      :data:`~ldgplates.mesh.mesh.QUAD`.
    :param dirichlet_sides: Sides among ``left``, ``right``, ``bottom``,
      ``top`` whose edges are labeled Dirichlet.
    :returns: A :class:`~ldgplates.mesh.mesh.Mesh` instance.
    """
    (x0, y0), (x1, y1) = corners
    if nx < 1 or ny < 1:
        raise mesh_lib.Error('nx and ny must be positive: %d, %d' % (nx, ny))
    if not (x1 > x0 and y1 > y0):
        raise mesh_lib.Error('Degenerate rectangle: (%g, %g) - (%g, %g)'
                             % (x0, y0, x1, y1))
    for side in dirichlet_sides:
        if side not in SIDES:
            raise mesh_lib.Error('Unknown side: %s' % side)
    xs = numpy.linspace(x0, x1, nx + 1)
    ys = numpy.linspace(y0, y1, ny + 1)
    vertices = numpy.array([(x, y) for y in ys for x in xs])

    def index(i, j):
        return j * (nx + 1) + i

    elements = []
    for j in range(ny):
        for i in range(nx):
            v00, v10 = index(i, j), index(i + 1, j)
            v11, v01 = index(i + 1, j + 1), index(i, j + 1)
            if kind == mesh_lib.QUAD:
                elements.append((v00, v10, v11, v01))
            else:
                elements.append((v00, v10, v11))
                elements.append((v00, v11, v01))
    labels = {}
    for side in dirichlet_sides:
        for pair in _side_edges(side, nx, ny, index):
            labels[pair] = mesh_lib.DIRICHLET
    return mesh_lib.Mesh(vertices, elements, kind, labels)


def _side_edges(side, nx, ny, index):
    if side == 'bottom':
        return [(index(i, 0), index(i + 1, 0)) for i in range(nx)]
    if side == 'top':
        return [(index(i, ny), index(i + 1, ny)) for i in range(nx)]
    if side == 'left':
        return [(index(0, j), index(0, j + 1)) for j in range(ny)]
    return [(index(nx, j), index(nx, j + 1)) for j in range(ny)]


def refine_uniformly(mesh):
    """Splits every element into four through its edge midpoints.

    Quadrilaterals also get a center vertex. Boundary labels are inherited by
    the two halves of a labeled edge.
    """
    vertices = [tuple(v) for v in mesh.get_vertices()]
    midpoints = {}

    def midpoint(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in midpoints:
            midpoints[key] = len(vertices)
            va, vb = mesh.get_vertices()[a], mesh.get_vertices()[b]
            vertices.append(tuple(0.5 * (va + vb)))
        return midpoints[key]

    elements = []
    for element in mesh.get_elements():
        element = [int(v) for v in element]
        n = len(element)
        mids = [midpoint(element[i], element[(i + 1) % n]) for i in range(n)]
        if mesh.get_kind() == mesh_lib.TRI:
            a, b, c = element
            mab, mbc, mca = mids
            elements.extend([(a, mab, mca), (mab, b, mbc), (mca, mbc, c),
                             (mab, mbc, mca)])
        else:
            center = len(vertices)
            vertices.append(tuple(mesh.get_vertices()[element].mean(axis=0)))
            v0, v1, v2, v3 = element
            m01, m12, m23, m30 = mids
            elements.extend([(v0, m01, center, m30), (m01, v1, m12, center),
                             (center, m12, v2, m23), (m30, center, m23, v3)])
    labels = {}
    for (a, b), label in mesh.get_boundary_labels().items():
        m = midpoints[(a, b) if a < b else (b, a)]
        labels[(a, m)] = label
        labels[(m, b)] = label
    return mesh_lib.Mesh(numpy.array(vertices), elements, mesh.get_kind(), labels)


def parse_structured_spec(spec):
    """Builds a mesh from ``x0,y0,x1,y1:nx,ny:tri|quad[:dirichlet=left+top]``."""
    fields = spec.strip().split(':')
    if len(fields) not in (3, 4):
        raise mesh_lib.Error('Malformed structured mesh spec: %s' % spec)
    try:
        x0, y0, x1, y1 = [float(v) for v in fields[0].split(',')]
        nx, ny = [int(v) for v in fields[1].split(',')]
    except ValueError:
        raise mesh_lib.Error('Malformed structured mesh spec: %s' % spec)
    kind = fields[2].strip().lower()
    if kind not in mesh_lib.ELEMENT_KINDS:
        raise mesh_lib.Error('Unknown element kind: %s' % kind)
    sides = ()
    if len(fields) == 4:
        key, _, value = fields[3].partition('=')
        if key.strip() != 'dirichlet':
            raise mesh_lib.Error('Unknown structured mesh option: %s' % fields[3])
        sides = tuple(s.strip() for s in value.split('+') if s.strip())
    return build_structured_mesh(((x0, y0), (x1, y1)), nx, ny, kind, sides)
