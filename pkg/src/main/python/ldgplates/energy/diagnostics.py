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

"""Sampled coercivity of bending energies."""

import numpy

from ldgplates.dg import dg_field
from ldgplates.dg import forms
from ldgplates.energy import bending


def coercivity_ratio(energy, y):
    """E(y) / |y|^2_H2h for the homogeneous quadratic part of `energy`."""
    skeleton = energy.get_assembly().get_skeleton()
    seminorm = sum(forms.h2_seminorm(skeleton, y.get_component(m)) ** 2
                   for m in range(y.get_num_components()))
    if seminorm <= 0.0:
        return None
    return 0.5 * energy.bilinear(y, y) / seminorm


def coercivity_check(energy, samples, seed=0):
    """Observed bounds of E(y) / |y|^2_H2h over random 3-vector fields.

    :returns: A dictionary with ``lower_observed`` and ``upper_observed``.
    """
    if samples < 1:
        raise ValueError('samples must be positive: %d' % samples)
    rng = numpy.random.default_rng(seed)
    space = energy.get_assembly().get_space()
    ratios = []
    for _ in range(samples):
        y = dg_field.random_field(space, bending.NUM_COMPONENTS, rng)
        ratio = coercivity_ratio(energy, y)
        if ratio is not None:
            ratios.append(ratio)
    return dict(lower_observed=float(min(ratios)), upper_observed=float(max(ratios)))
