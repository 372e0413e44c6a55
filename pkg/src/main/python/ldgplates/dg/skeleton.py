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

"""Edge skeleton of a mesh with trace, jump and average operators.

The active skeleton holds the interior edges and, in Dirichlet mode, the
Dirichlet boundary edges. Rows of every trace operator are indexed by
``edge_position * nq + q`` where `edge_position` is the position of the edge
in :meth:`Skeleton.get_edges`.

On an interior edge ``[v] = v^- - v^+`` and ``{v} = (v^- + v^+) / 2``. On a
Dirichlet edge ``{v} = v``, ``[v] = v - phi`` and ``[grad v] = grad v - Phi``;
the data part enters through :meth:`Skeleton.dirichlet_jump_data`.
"""

import numpy
from scipy import sparse

from ldgplates import mesh as mesh_lib
from ldgplates.dg import dg_space
from ldgplates.mesh import element_map

MINUS = 0
PLUS = 1


class TraceOperators(object):
    """Sparse maps from the dofs of one space to its traces on the skeleton."""

    def __init__(self, value_minus, value_plus, grad_minus, grad_plus, average_factors):
        self.value_minus = value_minus
        self.value_plus = value_plus
        self.grad_minus = grad_minus
        self.grad_plus = grad_plus
        avg = sparse.diags(average_factors)
        self.jump_value = (value_minus - value_plus).tocsr()
        self.jump_grad = [(grad_minus[i] - grad_plus[i]).tocsr() for i in range(2)]
        self.average_value = (avg @ (value_minus + value_plus)).tocsr()
        self.average_grad = [(avg @ (grad_minus[i] + grad_plus[i])).tocsr()
                             for i in range(2)]


class Skeleton(object):
    """Active edges of a space's mesh with their quadrature data.

    :param space: A :class:`~ldgplates.dg.dg_space.DGSpace`; its edge rule is
      used for every trace.
    :param include_dirichlet: Whether Dirichlet boundary edges are active.
    """

    def __init__(self, space, include_dirichlet=False):
        self._space = space
        self._mesh = space.get_mesh()
        self._include_dirichlet = include_dirichlet
        mesh = self._mesh
        edges = list(mesh.get_interior_edges())
        if include_dirichlet:
            edges.extend(mesh.get_boundary_edges(mesh_lib.DIRICHLET))
        self._edges = numpy.array(sorted(edges), dtype=int)
        rule = space.get_edge_rule()
        self._t = rule.get_points()
        nq = len(rule)
        self._nq = nq
        lengths = mesh.get_edge_lengths()[self._edges]
        self._weights = (lengths[:, None] * rule.get_weights()[None, :]).ravel()
        self._h = numpy.repeat(lengths, nq)
        self._normals = numpy.repeat(mesh.get_edge_normals()[self._edges], nq, axis=0)
        self._is_boundary = numpy.repeat(mesh.is_boundary_edge()[self._edges], nq)
        self._average_factors = numpy.where(self._is_boundary, 1.0, 0.5)
        vertices = mesh.get_vertices()[mesh.get_edge_vertices()[self._edges]]
        self._points = (vertices[:, None, 0, :] * (1.0 - self._t)[None, :, None]
                        + vertices[:, None, 1, :] * self._t[None, :, None]).reshape(-1, 2)
        self._operators = {}

    def get_space(self):
        return self._space

    def includes_dirichlet(self):
        return self._include_dirichlet

    def get_edges(self):
        return self._edges

    def get_num_edges(self):
        return len(self._edges)

    def get_num_points(self):
        return len(self._edges) * self._nq

    def get_points_per_edge(self):
        return self._nq

    def get_points(self):
        return self._points

    def get_weights(self):
        """Edge quadrature weights including the edge length."""
        return self._weights

    def get_h(self):
        """The mesh function h_e repeated at every edge quadrature point."""
        return self._h

    def get_normals(self):
        return self._normals

    def get_average_factors(self):
        return self._average_factors

    def get_boundary_mask(self):
        return self._is_boundary

    def get_point_edges(self):
        return numpy.repeat(self._edges, self._nq)

    def _reference_points(self, kind, local, side):
        ref_vertices = element_map.REFERENCE_VERTICES[kind]
        n = len(ref_vertices)
        a, b = ref_vertices[local], ref_vertices[(local + 1) % n]
        t = self._t if side == MINUS else 1.0 - self._t
        return a[None, :] + t[:, None] * (b - a)[None, :]

    def operators(self, space=None):
        """Returns the :class:`TraceOperators` of `space` (default: host space)."""
        if space is None:
            space = self._space
        if space.get_mesh() is not self._mesh:
            raise dg_space.SpaceMismatchError('Space lives on another mesh')
        key = id(space)
        if key not in self._operators:
            self._operators[key] = (space, self._build_operators(space))
        return self._operators[key][1]

    def _build_operators(self, space):
        mesh = self._mesh
        kind = mesh.get_kind()
        nq = self._nq
        nb = space.get_num_local_dofs()
        shape = (self.get_num_points(), space.get_num_dofs())
        edge_elements = mesh.get_edge_elements()[self._edges]
        edge_local = mesh.get_edge_local_indices()[self._edges]
        triplets = dict((key, ([], [], [])) for key in
                        [('v', side) for side in (MINUS, PLUS)]
                        + [('g', side, i) for side in (MINUS, PLUS) for i in range(2)])
        for side in (MINUS, PLUS):
            for local in range(element_map.num_vertices(kind)):
                positions = numpy.flatnonzero((edge_local[:, side] == local)
                                              & (edge_elements[:, side] >= 0))
                if not len(positions):
                    continue
                elements = edge_elements[positions, side]
                ref = self._reference_points(kind, local, side)
                values, grads, _ = dg_space.physical_derivatives(
                    kind, space.get_reference_element(),
                    mesh.get_element_coordinates(elements), ref)
                rows = (positions[:, None, None] * nq
                        + numpy.arange(nq)[None, :, None]
                        + numpy.zeros((1, 1, nb), dtype=int))
                cols = (elements[:, None, None] * nb
                        + numpy.arange(nb)[None, None, :]
                        + numpy.zeros((1, nq, 1), dtype=int))
                blocks = {
                    ('v', side): numpy.broadcast_to(values, (len(positions), nq, nb)),
                    ('g', side, 0): grads[..., 0],
                    ('g', side, 1): grads[..., 1],
                }
                for key, block in blocks.items():
                    r, c, d = triplets[key]
                    r.append(rows.ravel())
                    c.append(cols.ravel())
                    d.append(numpy.ascontiguousarray(block).ravel())

        def assemble(*key):
            r, c, d = triplets[key]
            if not r:
                return sparse.csr_matrix(shape)
            return sparse.csr_matrix((numpy.concatenate(d),
                                      (numpy.concatenate(r), numpy.concatenate(c))),
                                     shape=shape)

        return TraceOperators(assemble('v', MINUS), assemble('v', PLUS),
                              [assemble('g', MINUS, i) for i in range(2)],
                              [assemble('g', PLUS, i) for i in range(2)],
                              self._average_factors)

    def dirichlet_jump_data(self, phi, grad_phi, num_components=3):
        """Data parts of the value and gradient jumps on Dirichlet edges.

        :param phi: Callable mapping ``(P, 2)`` points to ``(P, c)`` values.
        :param grad_phi: Callable mapping ``(P, 2)`` points to ``(P, c, 2)``.
        :returns: Pair ``(value_data, grad_data)`` of shapes ``(c, P)`` and
          ``(c, 2, P)``; zero away from Dirichlet edges.
        """
        value_data = numpy.zeros((num_components, self.get_num_points()))
        grad_data = numpy.zeros((num_components, 2, self.get_num_points()))
        mask = self._is_boundary
        if mask.any():
            points = self._points[mask]
            value_data[:, mask] = -numpy.asarray(phi(points), dtype=float).reshape(
                -1, num_components).T
            grad_data[:, :, mask] = -numpy.transpose(
                numpy.asarray(grad_phi(points), dtype=float).reshape(-1, num_components, 2),
                (1, 2, 0))
        return value_data, grad_data

    def trace_data(self, field, value_data=None, grad_data=None):
        """Pointwise traces, jumps and averages of `field`."""
        return EdgeTraceData(self, field, value_data, grad_data)

    def __str__(self):
        return '%s[edges=%d, points=%d, dirichlet=%s]' % (
            self.__class__.__name__, self.get_num_edges(), self.get_num_points(),
            self._include_dirichlet)


class EdgeTraceData(object):
    """Traces of a field at the skeleton quadrature points.

    Arrays carry the component axis first and the point axis second; plus
    traces are zero on boundary edges.
    """

    def __init__(self, skeleton, field, value_data=None, grad_data=None):
        ops = skeleton.operators(field.get_space())
        coefficients = field.get_coefficients()
        self.skeleton = skeleton
        self.value_minus = (ops.value_minus @ coefficients.T).T
        self.value_plus = (ops.value_plus @ coefficients.T).T
        self.grad_minus = numpy.stack([(ops.grad_minus[i] @ coefficients.T).T
                                       for i in range(2)], axis=-1)
        self.grad_plus = numpy.stack([(ops.grad_plus[i] @ coefficients.T).T
                                      for i in range(2)], axis=-1)
        factors = skeleton.get_average_factors()
        self.average = factors * (self.value_minus + self.value_plus)
        self.average_grad = factors[:, None] * (self.grad_minus + self.grad_plus)
        self.jump = self.value_minus - self.value_plus
        self.jump_grad = self.grad_minus - self.grad_plus
        if value_data is not None:
            self.jump = self.jump + value_data
        if grad_data is not None:
            self.jump_grad = self.jump_grad + numpy.swapaxes(grad_data, 1, 2)
