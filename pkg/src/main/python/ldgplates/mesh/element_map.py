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

"""Affine (triangle) and bi-affine (quadrilateral) element maps.

All functions are batched: `coords` has shape ``(num_elements, num_vertices,
2)`` and reference points have shape ``(num_points, 2)``. Results carry the
element axis first and the point axis second.
"""

import numpy

TRI = 'tri'
QUAD = 'quad'

# Reference vertices in counterclockwise order.
REFERENCE_VERTICES = {
    TRI: numpy.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]),
    QUAD: numpy.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]),
}

REFERENCE_SHAPES = {TRI: 'triangle', QUAD: 'square'}


def num_vertices(kind):
    return len(REFERENCE_VERTICES[kind])


def shape_functions(kind, ref):
    """Returns vertex shape function values ``(num_points, num_vertices)``."""
    x, y = ref[:, 0], ref[:, 1]
    if kind == TRI:
        return numpy.column_stack([1.0 - x - y, x, y])
    return numpy.column_stack([(1.0 - x) * (1.0 - y), x * (1.0 - y), x * y,
                               (1.0 - x) * y])


def shape_gradients(kind, ref):
    """Returns ``(num_points, num_vertices, 2)`` reference gradients."""
    n = len(ref)
    if kind == TRI:
        grads = numpy.array([[-1.0, -1.0], [1.0, 0.0], [0.0, 1.0]])
        return numpy.broadcast_to(grads, (n, 3, 2)).copy()
    x, y = ref[:, 0], ref[:, 1]
    dx = numpy.column_stack([-(1.0 - y), 1.0 - y, y, -y])
    dy = numpy.column_stack([-(1.0 - x), -x, x, 1.0 - x])
    return numpy.stack([dx, dy], axis=-1)


def map_points(kind, coords, ref):
    return numpy.einsum('pv,evi->epi', shape_functions(kind, ref), coords)


def jacobians(kind, coords, ref):
    """DF[e, p, i, a] = d x_i / d xi_a."""
    return numpy.einsum('pva,evi->epia', shape_gradients(kind, ref), coords)


def second_derivatives(kind, coords, ref):
    """D2F[e, p, i, a, b] = d^2 x_i / d xi_a d xi_b.

    Only the mixed term of bi-affine maps is nonzero.
    """
    out = numpy.zeros((len(coords), len(ref), 2, 2, 2))
    if kind == QUAD:
        mixed = coords[:, 0] - coords[:, 1] + coords[:, 2] - coords[:, 3]
        out[:, :, :, 0, 1] = mixed[:, None, :]
        out[:, :, :, 1, 0] = mixed[:, None, :]
    return out


class ElementMap(object):
    """The map F_K of a single element from its reference element."""

    def __init__(self, kind, coords, index=0):
        if kind not in REFERENCE_VERTICES:
            raise ValueError('Unknown element kind: %s' % kind)
        self._kind = kind
        self._coords = numpy.asarray(coords, dtype=float).reshape(1, -1, 2)
        self._index = index

    def get_kind(self):
        return self._kind

    def get_index(self):
        return self._index

    def is_affine(self):
        if self._kind == TRI:
            return True
        c = self._coords[0]
        return numpy.allclose(c[0] - c[1] + c[2] - c[3], 0.0)

    def __call__(self, ref):
        return map_points(self._kind, self._coords, numpy.atleast_2d(ref))[0]

    def jacobian(self, ref):
        return jacobians(self._kind, self._coords, numpy.atleast_2d(ref))[0]

    def second_derivative(self, ref):
        return second_derivatives(self._kind, self._coords, numpy.atleast_2d(ref))[0]

    def inverse(self, points, tol=1e-14, max_iterations=50):
        """Reference coordinates of physical `points` (Newton for bi-affine maps)."""
        points = numpy.atleast_2d(points)
        ref = numpy.full(points.shape, 1.0 / 3.0 if self._kind == TRI else 0.5)
        for _ in range(max_iterations):
            residual = self(ref) - points
            step = numpy.linalg.solve(self.jacobian(ref), residual[..., None])[..., 0]
            ref = ref - step
            if numpy.abs(step).max() <= tol:
                break
        return ref

    def __str__(self):
        return '%s[index=%d, kind=%s]' % (self.__class__.__name__, self._index,
                                          self._kind)
