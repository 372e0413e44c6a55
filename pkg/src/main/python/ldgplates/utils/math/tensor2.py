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

"""Batched helpers for symmetric 2x2 matrices stored as ``(..., 2, 2)`` arrays."""

import numpy


def det(a):
    return a[..., 0, 0] * a[..., 1, 1] - a[..., 0, 1] * a[..., 1, 0]


def trace(a):
    return a[..., 0, 0] + a[..., 1, 1]


def inv(a):
    d = det(a)
    out = numpy.empty_like(a)
    out[..., 0, 0] = a[..., 1, 1] / d
    out[..., 1, 1] = a[..., 0, 0] / d
    out[..., 0, 1] = -a[..., 0, 1] / d
    out[..., 1, 0] = -a[..., 1, 0] / d
    return out


def sym(a):
    return 0.5 * (a + numpy.swapaxes(a, -1, -2))


def frobenius_norm(a):
    return numpy.sqrt(numpy.sum(a * a, axis=(-2, -1)))


def identity_like(a):
    out = numpy.zeros_like(a)
    out[..., 0, 0] = 1.0
    out[..., 1, 1] = 1.0
    return out


def is_spd(a, tol=0.0):
    """True where `a` is symmetric with positive eigenvalues."""
    symmetric = numpy.abs(a[..., 0, 1] - a[..., 1, 0]) <= 1e-12 * (
        1.0 + numpy.abs(a[..., 0, 1]))
    return symmetric & (trace(a) > tol) & (det(a) > tol)


def sqrt_spd(a):
    """Square root of SPD 2x2 matrices: (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A))."""
    s = numpy.sqrt(det(a))
    t = numpy.sqrt(trace(a) + 2.0 * s)
    out = a + s[..., None, None] * identity_like(a)
    return out / t[..., None, None]


def inv_sqrt_spd(a):
    return inv(sqrt_spd(a))
