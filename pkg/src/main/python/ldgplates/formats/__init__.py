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

"""Writers of run outputs: step logs, refinement tables, JSON reports and
surface files."""

from ldgplates.formats.steps import COLUMNS
from ldgplates.formats.steps import STUDY_COLUMNS
from ldgplates.formats.steps import StepsEncoder
from ldgplates.formats.steps import StudyEncoder
from ldgplates.formats.reports import read_message
from ldgplates.formats.reports import write_message
from ldgplates.formats.surface import surface_mesh
from ldgplates.formats.surface import write_surface


def write_steps(filename_or_stream, records):
    return StepsEncoder(filename_or_stream, records)


def write_study(filename_or_stream, rows):
    return StudyEncoder(filename_or_stream, rows)
