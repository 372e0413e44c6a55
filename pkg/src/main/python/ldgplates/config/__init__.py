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

"""Run configuration files.

Flat key/value text with section headers::

  # comment
  [mesh]
  nx = 16
  kind = quad

  [metric]
  name = stretched
  beta = 0.5

Sections are the fields of :class:`~ldgplates.parameters.RunParameters`,
keys the fields of the section message. Enum values are matched by name,
case-insensitive, with or without the enum prefix (``h2`` or ``SIGMA_H2``).
"""

import io

from ldgplates import parameters
from ldgplates.config.decoder import Decoder
from ldgplates.config.decoder import Error
from ldgplates.config.decoder import apply_override
from ldgplates.config.encoder import Encoder


def decode(filename_or_stream):
    return Decoder(filename_or_stream)


def load_parameters(filename_or_stream):
    '''Reads a configuration file into :class:`~ldgplates.parameters.RunParameters`.

    :raises: :exc:`Error`
    '''
    return Decoder(filename_or_stream).get_parameters()


def save_parameters(filename_or_stream, params):
    Encoder(filename_or_stream, params)


def describe_defaults():
    '''Every section and key with its default value, as configuration text.'''
    stream = io.StringIO()
    Encoder(stream, parameters.RunParameters())
    return stream.getvalue()
