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

"""Broken polynomial spaces V_h^k on a mesh."""

import numpy
from scipy import sparse

from ldgplates import mesh as mesh_lib
from ldgplates.dg import reference_element
from ldgplates.mesh import element_map
from ldgplates.runtime import thread_pool
from ldgplates.utils import logging
from ldgplates.utils.math import quadrature
from ldgplates.utils.math import tensor2

MIN_DEGREE = 2


class Error(Exception):
    pass


class SpaceMismatchError(Error):
    pass


def physical_derivatives(kind, reference, coords, ref):
    """Returns basis values, physical gradients and physical Hessians.

    :param kind: Element kind.
    :param reference: A :class:`ReferenceElement` instance.
    :param coords: ``(n, num_vertices, 2)`` element coordinates.
    :param ref: ``(num_points, 2)`` reference points shared by all elements.
    :returns: Arrays of shapes ``(num_points, nb)``, ``(n, num_points, nb, 2)``
      and ``(n, num_points, nb, 2, 2)``.
    """
    values = reference.values(ref)
    d_ref = reference.gradients(ref)
    d2_ref = reference.hessians(ref)
    jac_inv = tensor2.inv(element_map.jacobians(kind, coords, ref))
    grads = numpy.einsum('pba,epai->epbi', d_ref, jac_inv)
    # Chain rule for x = F(xi); the bi-affine map adds a D^2 F correction.
    d2f = element_map.second_derivatives(kind, coords, ref)
    inner = d2_ref[None] - numpy.einsum('epbk,epkac->epbac', grads, d2f)
    hessians = numpy.einsum('epai,epbac,epcj->epbij', jac_inv, inner, jac_inv)
    return values, grads, hessians


def block_diagonal(blocks):
    """Builds a CSR matrix from ``(n, rows, cols)`` element blocks."""
    n, rows, cols = blocks.shape
    row_index = (numpy.arange(n)[:, None, None] * rows
                 + numpy.arange(rows)[None, :, None])
    col_index = (numpy.arange(n)[:, None, None] * cols
                 + numpy.arange(cols)[None, None, :])
    row_index, col_index = numpy.broadcast_arrays(row_index, col_index)
    return sparse.csr_matrix((blocks.ravel(), (row_index.ravel(), col_index.ravel())),
                             shape=(n * rows, n * cols))


class DGSpace(object):
    """Scalar broken space of degree k >= 2 on a mesh.

    Degrees of freedom are laid out element by element: element K owns the
    contiguous block ``[K * nb, (K + 1) * nb)``.

    :param mesh: A :class:`~ldgplates.mesh.Mesh` instance.
    :param degree: Polynomial degree.
    :param quadrature_degree: Exactness of the element rule (default 2k+2).
    :param edge_quadrature_degree: Exactness of the edge rule (default 2k+1).
    :param min_degree: Smallest admissible degree; tensor spaces used by the
      lifting operators accept lower degrees.
    """

    def __init__(self, mesh, degree, quadrature_degree=None,
                 edge_quadrature_degree=None, min_degree=MIN_DEGREE):
        if not isinstance(mesh, mesh_lib.Mesh):
            raise TypeError('mesh must be a Mesh: %s' % type(mesh))
        if not min_degree <= degree <= reference_element.MAX_DEGREE:
            raise ValueError('Degree must lie in [%d, %d]: %d'
                             % (min_degree, reference_element.MAX_DEGREE, degree))
        self._mesh = mesh
        self._degree = degree
        self._reference = reference_element.ReferenceElement(mesh.get_kind(), degree)
        if quadrature_degree is None:
            quadrature_degree = 2 * max(degree, MIN_DEGREE) + 2
        if edge_quadrature_degree is None:
            edge_quadrature_degree = 2 * max(degree, MIN_DEGREE) + 1
        self._quadrature_degree = quadrature_degree
        self._edge_quadrature_degree = edge_quadrature_degree
        self._rule = quadrature.element_rule(self._reference.get_shape(),
                                             quadrature_degree)
        self._edge_rule = quadrature.segment_rule(edge_quadrature_degree)
        self._precompute()
        logging.debug('Built %s', self)

    def _precompute(self):
        kind = self._mesh.get_kind()
        coords = self._mesh.get_element_coordinates()
        ref = self._rule.get_points()

        def compute(chunk):
            chunk = list(chunk)
            c = coords[chunk]
            _, grads, hessians = physical_derivatives(kind, self._reference, c, ref)
            dets = numpy.linalg.det(element_map.jacobians(kind, c, ref))
            points = element_map.map_points(kind, c, ref)
            return grads, hessians, dets, points

        pool = thread_pool.ThreadPool()
        try:
            chunks = thread_pool.split_range(len(coords), 4 * pool.get_num_workers())
            results = pool.map(compute, chunks)
        finally:
            pool.dismiss_workers()
        self._values = self._reference.values(ref)
        self._grads = numpy.concatenate([r[0] for r in results])
        self._hessians = numpy.concatenate([r[1] for r in results])
        self._weights = numpy.concatenate([r[2] for r in results]) * self._rule.get_weights()
        self._points = numpy.concatenate([r[3] for r in results])

    def get_mesh(self):
        return self._mesh

    def get_degree(self):
        return self._degree

    def get_reference_element(self):
        return self._reference

    def get_element_rule(self):
        return self._rule

    def get_edge_rule(self):
        return self._edge_rule

    def get_quadrature_degrees(self):
        """Requested exactness of the element and edge rules."""
        return self._quadrature_degree, self._edge_quadrature_degree

    def get_num_local_dofs(self):
        return self._reference.get_num_functions()

    def get_num_dofs(self):
        return self._mesh.get_num_elements() * self.get_num_local_dofs()

    def get_element_dofs(self, element):
        nb = self.get_num_local_dofs()
        return numpy.arange(element * nb, (element + 1) * nb)

    def get_quadrature_points(self):
        """``(num_elements, nq, 2)`` physical quadrature points."""
        return self._points

    def get_quadrature_weights(self):
        """``(num_elements, nq)`` weights including |det DF_K|."""
        return self._weights

    def get_basis_values(self):
        """``(nq, nb)`` basis values, identical on every element."""
        return self._values

    def get_basis_gradients(self):
        return self._grads

    def get_basis_hessians(self):
        return self._hessians

    def is_compatible(self, other):
        return (other is self or
                (isinstance(other, DGSpace) and other._mesh is self._mesh and
                 other._degree == self._degree))

    def physical_basis(self, elements, ref):
        """Basis data of `elements` at shared reference points `ref`."""
        coords = self._mesh.get_element_coordinates(elements)
        if coords.ndim == 2:
            coords = coords[None]
        return physical_derivatives(self._mesh.get_kind(), self._reference, coords,
                                    numpy.atleast_2d(ref))

    def value_matrix(self):
        """Sparse map from dofs to values at element quadrature points."""
        ne = self._mesh.get_num_elements()
        blocks = numpy.broadcast_to(self._values, (ne,) + self._values.shape)
        return block_diagonal(numpy.ascontiguousarray(blocks))

    def gradient_matrices(self):
        return [block_diagonal(numpy.ascontiguousarray(self._grads[..., i]))
                for i in range(2)]

    def hessian_matrices(self):
        """``[[D11, D12], [D21, D22]]`` sparse broken-Hessian evaluation maps."""
        return [[block_diagonal(numpy.ascontiguousarray(self._hessians[..., i, j]))
                 for j in range(2)] for i in range(2)]

    def mass_matrix(self):
        blocks = numpy.einsum('eq,qa,qb->eab', self._weights, self._values, self._values)
        return block_diagonal(blocks)

    def local_mass_matrices(self):
        return numpy.einsum('eq,qa,qb->eab', self._weights, self._values, self._values)

    def integrate(self, values):
        """Integrates quadrature values of shape ``(..., num_elements, nq)``."""
        return numpy.einsum('...eq,eq->...', values, self._weights)

    def interpolate(self, function, num_components=None):
        '''Lagrange interpolant of a vectorized function.

        :param function: Callable mapping ``(N, 2)`` points to ``(N,)`` or
          ``(N, c)`` values.
        :returns: A :class:`~ldgplates.dg.dg_field.DGField` instance.
        '''
        from ldgplates.dg import dg_field
        kind = self._mesh.get_kind()
        nodes = element_map.map_points(kind, self._mesh.get_element_coordinates(),
                                       self._reference.get_nodes())
        values = numpy.asarray(function(nodes.reshape(-1, 2)), dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if num_components is not None and values.shape[1] != num_components:
            raise Error('Interpolated function has %d components, expected %d'
                        % (values.shape[1], num_components))
        return dg_field.DGField(self, values.T.copy())

    def __str__(self):
        return '%s[degree=%d, elements=%d, dofs=%d]' % (
            self.__class__.__name__, self._degree, self._mesh.get_num_elements(),
            self.get_num_dofs())
