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

import numbers

import numpy

from ldgplates.dg import dg_space


class DGField(object):
    """A scalar or vector valued function of a :class:`DGSpace`.

    Coefficients are stored as a ``(num_components, num_dofs)`` array; the
    flattened vector is component-major.

    :param space: A :class:`~ldgplates.dg.dg_space.DGSpace` instance.
    :param coefficients: Array of shape ``(c, num_dofs)`` or ``(num_dofs,)``.
    """

    def __init__(self, space, coefficients=None, num_components=1):
        if not isinstance(space, dg_space.DGSpace):
            raise TypeError('space must be a DGSpace: %s' % type(space))
        self._space = space
        if coefficients is None:
            coefficients = numpy.zeros((num_components, space.get_num_dofs()))
        coefficients = numpy.array(coefficients, dtype=float)
        if coefficients.ndim == 1:
            coefficients = coefficients.reshape(-1, space.get_num_dofs())
        if coefficients.shape[1] != space.get_num_dofs():
            raise dg_space.Error('Expected %d dofs per component, got %d'
                                 % (space.get_num_dofs(), coefficients.shape[1]))
        self._coefficients = coefficients

    def get_space(self):
        return self._space

    def get_num_components(self):
        return self._coefficients.shape[0]

    def get_coefficients(self):
        return self._coefficients

    def get_vector(self):
        """Flattened component-major coefficient vector."""
        return self._coefficients.ravel()

    def get_component(self, m):
        return DGField(self._space, self._coefficients[m:m + 1])

    def copy(self):
        return DGField(self._space, self._coefficients.copy())

    def check_compatible(self, other):
        if not isinstance(other, DGField):
            raise TypeError('Expected a DGField: %s' % type(other))
        if not self._space.is_compatible(other.get_space()):
            raise dg_space.SpaceMismatchError('Fields live in different spaces: %s, %s'
                                              % (self._space, other.get_space()))
        if self.get_num_components() != other.get_num_components():
            raise dg_space.SpaceMismatchError(
                'Fields have %d and %d components' % (self.get_num_components(),
                                                      other.get_num_components()))

    def local_coefficients(self, element):
        """``(c, nb)`` coefficients of `element`."""
        if not 0 <= element < self._space.get_mesh().get_num_elements():
            raise IndexError('Element index out of range: %d' % element)
        nb = self._space.get_num_local_dofs()
        return self._coefficients[:, element * nb:(element + 1) * nb]

    def evaluate(self, element, ref_points):
        """Values, gradients and Hessians at reference points of `element`.

        :returns: Arrays of shapes ``(c, p)``, ``(c, p, 2)`` and ``(c, p, 2, 2)``.
        """
        local = self.local_coefficients(element)
        values, grads, hessians = self._space.physical_basis(element, ref_points)
        return (numpy.einsum('cb,pb->cp', local, values),
                numpy.einsum('cb,pbi->cpi', local, grads[0]),
                numpy.einsum('cb,pbij->cpij', local, hessians[0]))

    def _element_blocks(self):
        nb = self._space.get_num_local_dofs()
        return self._coefficients.reshape(self.get_num_components(), -1, nb)

    def values(self):
        """``(c, num_elements, nq)`` values at element quadrature points."""
        return numpy.einsum('ceb,qb->ceq', self._element_blocks(),
                            self._space.get_basis_values())

    def gradients(self):
        """``(c, num_elements, nq, 2)`` broken gradients."""
        return numpy.einsum('ceb,eqbi->ceqi', self._element_blocks(),
                            self._space.get_basis_gradients())

    def hessians(self):
        """``(c, num_elements, nq, 2, 2)`` broken Hessians D^2_h."""
        return numpy.einsum('ceb,eqbij->ceqij', self._element_blocks(),
                            self._space.get_basis_hessians())

    def integrate(self):
        """Componentwise integral over the domain."""
        return self._space.integrate(self.values())

    def mean(self):
        return self.integrate() / self._space.get_mesh().get_area()

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            return self._shifted(numpy.full(self.get_num_components(), float(other)))
        self.check_compatible(other)
        return DGField(self._space, self._coefficients + other.get_coefficients())

    def __sub__(self, other):
        if isinstance(other, numbers.Number):
            return self + (-other)
        self.check_compatible(other)
        return DGField(self._space, self._coefficients - other.get_coefficients())

    def __mul__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return DGField(self._space, self._coefficients * scalar)

    __rmul__ = __mul__

    def __neg__(self):
        return DGField(self._space, -self._coefficients)

    def _shifted(self, constant):
        # Nodal basis: a constant has all coefficients equal to it.
        return DGField(self._space, self._coefficients + numpy.asarray(constant)[:, None])

    def shift(self, constant):
        """Adds a constant vector, one entry per component."""
        constant = numpy.asarray(constant, dtype=float).ravel()
        if len(constant) != self.get_num_components():
            raise ValueError('Expected %d entries, got %d'
                             % (self.get_num_components(), len(constant)))
        return self._shifted(constant)

    def transform(self, matrix):
        """Applies a ``(c, c)`` matrix pointwise, e.g. a rotation of R^3."""
        return DGField(self._space, numpy.asarray(matrix).dot(self._coefficients))

    def __str__(self):
        return '%s[components=%d, space=%s]' % (self.__class__.__name__,
                                                self.get_num_components(), self._space)


def random_field(space, num_components=1, rng=None, scale=1.0):
    """Field with independent standard normal coefficients."""
    if rng is None:
        rng = numpy.random.default_rng(0)
    return DGField(space, scale * rng.standard_normal((num_components,
                                                       space.get_num_dofs())))


def stack(fields):
    """Concatenates the components of fields living in the same space."""
    space = fields[0].get_space()
    for field in fields[1:]:
        if not space.is_compatible(field.get_space()):
            raise dg_space.SpaceMismatchError('Cannot stack fields of different spaces')
    return DGField(space, numpy.vstack([f.get_coefficients() for f in fields]))
