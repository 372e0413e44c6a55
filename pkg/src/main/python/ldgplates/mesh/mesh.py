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

"""Conforming triangulations and quadrangulations of polygonal domains.

A :class:`Mesh` is immutable once built. Its skeleton is enumerated in
element order; every edge stores a "minus" and a "plus" element, where the
minus element is the one with the smaller index, and the unit normal n_e
points from the minus element into the plus element. Boundary edges have no
plus element and their normal points out of the domain.
"""

import numpy

from ldgplates.mesh import element_map
from ldgplates.utils import logging
from ldgplates.utils.math import quadrature

TRI = element_map.TRI
QUAD = element_map.QUAD
ELEMENT_KINDS = (TRI, QUAD)

FREE = 'free'
DIRICHLET = 'dirichlet'
BOUNDARY_LABELS = (FREE, DIRICHLET)

NO_ELEMENT = -1


class Error(Exception):
    pass


class NonconformingError(Error):

    def __init__(self, element, message):
        Error.__init__(self, message)
        self.element = element


class DegenerateElementError(Error):

    def __init__(self, element, message):
        Error.__init__(self, 'Element %d: %s' % (element, message))
        self.element = element


def _edge_key(a, b):
    return (a, b) if a < b else (b, a)


def _incircle_radius(p0, p1, p2):
    area = 0.5 * abs((p1[0] - p0[0]) * (p2[1] - p0[1])
                     - (p1[1] - p0[1]) * (p2[0] - p0[0]))
    perimeter = (numpy.linalg.norm(p1 - p0) + numpy.linalg.norm(p2 - p1)
                 + numpy.linalg.norm(p0 - p2))
    return 2.0 * area / perimeter


def _signed_area(p0, p1, p2):
    return 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1])
                  - (p1[1] - p0[1]) * (p2[0] - p0[0]))


class Mesh(object):
    """Conforming mesh with one element kind.

    :param vertices: ``(N, 2)`` array of coordinates.
    :param elements: ``(M, 3)`` or ``(M, 4)`` vertex indices, counterclockwise.
    :param kind: Either :data:`TRI` or :data:`QUAD`.
    :param boundary_labels: Optional dictionary mapping a boundary vertex pair
      to :data:`FREE` or :data:`DIRICHLET`. Unlabeled boundary edges are free.
    :raises: :exc:`Error` when the connectivity is invalid.
    """

    def __init__(self, vertices, elements, kind=TRI, boundary_labels=None):
        if kind not in ELEMENT_KINDS:
            raise Error('Unknown element kind: %s' % kind)
        self._kind = kind
        self._vertices = numpy.array(vertices, dtype=float).reshape(-1, 2)
        self._elements = numpy.array(elements, dtype=int).reshape(
            -1, element_map.num_vertices(kind))
        self._vertices.setflags(write=False)
        self._elements.setflags(write=False)
        self._check_connectivity()
        self._build_edges()
        self._apply_boundary_labels(boundary_labels or {})
        self._check_geometry()
        logging.debug('Built %s', self)

    def _check_connectivity(self):
        if not len(self._elements):
            raise Error('Mesh has no elements')
        nv = len(self._vertices)
        for e, element in enumerate(self._elements):
            if element.min() < 0 or element.max() >= nv:
                raise Error('Element %d references a vertex out of range [0, %d)'
                            % (e, nv))
            if len(set(element.tolist())) != len(element):
                raise DegenerateElementError(e, 'repeated vertex')

    def _build_edges(self):
        edges = {}
        order = []
        n = element_map.num_vertices(self._kind)
        for e, element in enumerate(self._elements):
            for local in range(n):
                a, b = int(element[local]), int(element[(local + 1) % n])
                key = _edge_key(a, b)
                if key not in edges:
                    edges[key] = []
                    order.append(key)
                edges[key].append((e, local, a, b))
        num_edges = len(order)
        self._edge_vertices = numpy.empty((num_edges, 2), dtype=int)
        self._edge_elements = numpy.full((num_edges, 2), NO_ELEMENT, dtype=int)
        self._edge_local = numpy.full((num_edges, 2), NO_ELEMENT, dtype=int)
        for i, key in enumerate(order):
            sides = edges[key]
            if len(sides) > 2:
                raise NonconformingError(sides[2][0], 'Edge %s is shared by %d elements'
                                         % (key, len(sides)))
            if len(sides) == 2 and sides[0][2:] == sides[1][2:]:
                raise NonconformingError(sides[1][0],
                                         'Elements %d and %d traverse edge %s in the '
                                         'same direction' % (sides[0][0], sides[1][0], key))
            sides.sort()
            minus = sides[0]
            self._edge_vertices[i] = minus[2], minus[3]
            self._edge_elements[i, 0] = minus[0]
            self._edge_local[i, 0] = minus[1]
            if len(sides) == 2:
                self._edge_elements[i, 1] = sides[1][0]
                self._edge_local[i, 1] = sides[1][1]
        self._edge_index = dict((key, i) for i, key in enumerate(order))
        tangents = (self._vertices[self._edge_vertices[:, 1]]
                    - self._vertices[self._edge_vertices[:, 0]])
        self._edge_lengths = numpy.linalg.norm(tangents, axis=1)
        if (self._edge_lengths <= 0.0).any():
            raise Error('Zero-length edge %d' % numpy.argmin(self._edge_lengths))
        # Outward normal of the minus element for a counterclockwise traversal.
        self._edge_normals = numpy.column_stack(
            [tangents[:, 1], -tangents[:, 0]]) / self._edge_lengths[:, None]
        self._is_boundary = self._edge_elements[:, 1] == NO_ELEMENT

    def _apply_boundary_labels(self, labels):
        self._edge_labels = [None] * self.get_num_edges()
        for i in numpy.flatnonzero(self._is_boundary):
            self._edge_labels[i] = FREE
        for pair, label in labels.items():
            key = _edge_key(int(pair[0]), int(pair[1]))
            if key not in self._edge_index:
                raise Error('Labeled edge %s is not an edge of the mesh' % (key,))
            i = self._edge_index[key]
            if not self._is_boundary[i]:
                raise Error('Labeled edge %s is an interior edge' % (key,))
            if label not in BOUNDARY_LABELS:
                raise Error('Unknown boundary label for edge %s: %s' % (key, label))
            self._edge_labels[i] = label
        self._edge_labels = tuple(self._edge_labels)

    def _check_geometry(self):
        coords = self.get_element_coordinates()
        shape = element_map.REFERENCE_SHAPES[self._kind]
        ref = numpy.vstack([quadrature.element_rule(shape, 4).get_points(),
                            element_map.REFERENCE_VERTICES[self._kind]])
        dets = numpy.linalg.det(element_map.jacobians(self._kind, coords, ref))
        scale = numpy.array([self._diameter(c) for c in coords]) ** 2
        bad = numpy.flatnonzero(dets.min(axis=1) <= 1e-14 * scale)
        if len(bad):
            raise DegenerateElementError(
                int(bad[0]), 'non-positive Jacobian determinant %g'
                % dets[bad[0]].min())
        self._min_det = dets.min(axis=1)
        self._diameters = numpy.sqrt(scale)
        if self._kind == QUAD:
            for e, c in enumerate(coords):
                for tri in ((0, 1, 2), (0, 2, 3), (0, 1, 3), (1, 2, 3)):
                    if _signed_area(*c[list(tri)]) <= 0.0:
                        raise DegenerateElementError(e, 'quadrilateral is not convex')
        self._areas = self._integrate_constant(coords)

    def _integrate_constant(self, coords):
        shape = element_map.REFERENCE_SHAPES[self._kind]
        rule = quadrature.element_rule(shape, 2)
        dets = numpy.linalg.det(element_map.jacobians(self._kind, coords,
                                                      rule.get_points()))
        return dets.dot(rule.get_weights())

    @staticmethod
    def _diameter(c):
        diffs = c[:, None, :] - c[None, :, :]
        return numpy.sqrt((diffs ** 2).sum(axis=-1)).max()

    def get_kind(self):
        return self._kind

    def get_vertices(self):
        return self._vertices

    def get_elements(self):
        return self._elements

    def get_num_vertices(self):
        return len(self._vertices)

    def get_num_elements(self):
        return len(self._elements)

    def get_num_edges(self):
        return len(self._edge_vertices)

    def get_element_coordinates(self, elements=None):
        """Returns ``(num_elements, num_vertices, 2)`` vertex coordinates."""
        if elements is None:
            return self._vertices[self._elements]
        return self._vertices[self._elements[elements]]

    def get_element_map(self, element):
        if not 0 <= element < self.get_num_elements():
            raise IndexError('Element index out of range: %d' % element)
        return element_map.ElementMap(self._kind, self.get_element_coordinates(element),
                                      element)

    def get_element_diameters(self):
        """The mesh function on elements: h_K, the element diameter."""
        return self._diameters

    def get_element_areas(self):
        return self._areas

    def get_area(self):
        return float(self._areas.sum())

    def get_h_max(self):
        return float(self._diameters.max())

    def get_h_min(self):
        return float(self._diameters.min())

    def get_edge_vertices(self):
        """Edge endpoints ordered counterclockwise for the minus element."""
        return self._edge_vertices

    def get_edge_elements(self):
        """``(num_edges, 2)`` array of minus and plus elements (-1 if none)."""
        return self._edge_elements

    def get_edge_local_indices(self):
        return self._edge_local

    def get_edge_lengths(self):
        """The mesh function on edges: h_e, the edge length."""
        return self._edge_lengths

    def get_edge_normals(self):
        return self._edge_normals

    def get_edge_labels(self):
        """Per-edge labels: ``None`` for interior edges, else FREE or DIRICHLET."""
        return self._edge_labels

    def get_edge_index(self, a, b):
        return self._edge_index[_edge_key(a, b)]

    def is_boundary_edge(self):
        return self._is_boundary

    def get_interior_edges(self):
        return numpy.flatnonzero(~self._is_boundary)

    def get_boundary_edges(self, label=None):
        edges = numpy.flatnonzero(self._is_boundary)
        if label is None:
            return edges
        return numpy.array([i for i in edges if self._edge_labels[i] == label],
                           dtype=int)

    def get_boundary_labels(self):
        """Returns a dictionary from boundary vertex pairs to labels."""
        return dict((tuple(int(v) for v in self._edge_vertices[i]), self._edge_labels[i])
                    for i in self.get_boundary_edges())

    def has_dirichlet_edges(self):
        return DIRICHLET in self._edge_labels

    def get_min_jacobian_determinants(self):
        return self._min_det

    def __str__(self):
        return '%s[kind=%s, vertices=%d, elements=%d, edges=%d]' % (
            self.__class__.__name__, self._kind, self.get_num_vertices(),
            self.get_num_elements(), self.get_num_edges())


def shape_regularity_report(mesh):
    """Returns the worst-case shape-regularity quantities of `mesh`.

    For triangles rho_K is the incircle radius; for quadrilaterals it is the
    smallest incircle radius of the four subtriangles of both diagonal splits.

    :returns: A dictionary with keys ``max_ratio``, ``min_det``, ``h_max`` and
      ``h_min``.
    """
    coords = mesh.get_element_coordinates()
    if mesh.get_kind() == TRI:
        subtriangles = ((0, 1, 2),)
    else:
        subtriangles = ((0, 1, 2), (0, 2, 3), (0, 1, 3), (1, 2, 3))
    ratios = numpy.empty(len(coords))
    for e, c in enumerate(coords):
        rho = min(_incircle_radius(*c[list(t)]) for t in subtriangles)
        ratios[e] = mesh.get_element_diameters()[e] / rho
    return {
        'max_ratio': float(ratios.max()),
        'min_det': float(mesh.get_min_jacobian_determinants().min()),
        'h_max': mesh.get_h_max(),
        'h_min': mesh.get_h_min(),
    }
