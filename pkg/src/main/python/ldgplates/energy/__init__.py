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

from ldgplates.energy.metric import Error
from ldgplates.energy.metric import MetricField
from ldgplates.energy.metric import NonSPDMetricError
from ldgplates.energy.metric import identity_metric
from ldgplates.energy.catalog import AnalyticImmersion
from ldgplates.energy.catalog import expression_metric
from ldgplates.energy.catalog import get_immersion
from ldgplates.energy.catalog import get_metric
from ldgplates.energy.catalog import stretched_metric
from ldgplates.energy.bending import NUM_COMPONENTS
from ldgplates.energy.bending import BendingEnergy
from ldgplates.energy.bending import EnergyBreakdown
from ldgplates.energy.bending import EnergyParams
from ldgplates.energy.bending import energy_Eh
from ldgplates.energy.bending import form_ah
from ldgplates.energy.defect import constraint_matrix
from ldgplates.energy.defect import defect_density
from ldgplates.energy.defect import form_bh
from ldgplates.energy.defect import gradient_estimate_check
from ldgplates.energy.defect import metric_defect
from ldgplates.energy.preprocess import PreprocessEnergy
from ldgplates.energy.preprocess import defect_stretching_chain
from ldgplates.energy.preprocess import energy_preprocess
from ldgplates.energy.preprocess import forms_preprocess
from ldgplates.energy.continuous import continuous_energy_check
from ldgplates.energy.diagnostics import coercivity_check
