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

"""Bending energy of analytic immersions through II[y] and through D^2 y."""

import numpy

from ldgplates.energy import metric as metric_lib
from ldgplates.utils.math import tensor2

ADMISSIBILITY_TOLERANCE = 1e-8


def continuous_energy_check(immersion, metric, mu, lam, space):
    """Compares the energy written with the second fundamental form with the
    energy written with the Hessians of the components.

    With G = g^-1/2 the pointwise residuals

      f1 = sum_m |G D^2 y_m G|^2 - |G II G|^2,
      f2 = sum_m tr(G D^2 y_m G)^2 - tr(G II G)^2

    are nonnegative and vanish for g = I.

    :param space: A :class:`~ldgplates.dg.DGSpace` whose element quadrature
      is used for the integrals.
    :raises: :exc:`~ldgplates.energy.metric.Error` if grad y^T grad y != g.
    """
    points = space.get_quadrature_points().reshape(-1, 2)
    shape = space.get_quadrature_weights().shape
    g = metric(points)
    violation = tensor2.frobenius_norm(immersion.first_fundamental_form(points) - g)
    if violation.max() > ADMISSIBILITY_TOLERANCE:
        raise metric_lib.Error('Immersion %s does not realize %s: max violation %g'
                               % (immersion.get_name(), metric.get_name(), violation.max()))
    root = metric.inverse_sqrt(points)
    hessians = immersion.hessian(points)
    second = immersion.second_fundamental_form(points)
    scaled_hessians = numpy.einsum('nij,nmjk,nkl->nmil', root, hessians, root)
    scaled_second = numpy.einsum('nij,njk,nkl->nil', root, second, root)
    frobenius_d2 = (scaled_hessians ** 2).sum(axis=(-2, -1)).sum(axis=1)
    frobenius_ii = (scaled_second ** 2).sum(axis=(-2, -1))
    trace_d2 = (tensor2.trace(scaled_hessians) ** 2).sum(axis=1)
    trace_ii = tensor2.trace(scaled_second) ** 2
    c1 = mu / 12.0
    c2 = mu * lam / (12.0 * (2.0 * mu + lam))
    via_hessian = space.integrate((c1 * frobenius_d2 + c2 * trace_d2).reshape(shape))
    via_second = space.integrate((c1 * frobenius_ii + c2 * trace_ii).reshape(shape))
    f1 = frobenius_d2 - frobenius_ii
    f2 = trace_d2 - trace_ii
    return dict(E_via_II=float(via_second), E_via_Hessian=float(via_hessian),
                f1_residual=float(abs(f1).max()), f1_min=float(f1.min()),
                f2_residual=float(abs(f2).max()), f2_min=float(f2.min()),
                admissibility_violation=float(violation.max()))
