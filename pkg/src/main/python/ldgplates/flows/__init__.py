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

from ldgplates.flows.flow_config import Error
from ldgplates.flows.flow_config import KKTError
from ldgplates.flows.flow_config import FlowConfig
from ldgplates.flows.flow_config import FlowState
from ldgplates.flows.flow_config import PreprocessConfig
from ldgplates.flows.infsup import estimate_infsup
from ldgplates.flows.infsup import flow_gram
from ldgplates.flows.infsup import poincare_constant
from ldgplates.flows.main_flow import MainFlow
from ldgplates.flows.main_flow import main_flow_step
from ldgplates.flows.main_flow import run_main_flow
from ldgplates.flows.main_flow import stationarity_residual
from ldgplates.flows.preprocess_flow import StepRuleConstants
from ldgplates.flows.preprocess_flow import estimate_preprocess_constants
from ldgplates.flows.preprocess_flow import flat_initial_guess
from ldgplates.flows.preprocess_flow import preprocess_step
from ldgplates.flows.preprocess_flow import run_preprocess
from ldgplates.flows.preprocess_flow import sigma_for_rule
from ldgplates.flows.bilaplacian import bilaplacian_init
from ldgplates.flows.certificates import flow_certificates
from ldgplates.flows.certificates import preprocess_certificates
