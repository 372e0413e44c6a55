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

"""Native mesh text format.

The format is UTF-8 text with 0-based indices::

  ldgmesh v1 tri
  vertices 4
  0.0 0.0
  ...
  elements 2
  0 1 2
  ...
  boundary 4
  0 1 dirichlet
  ...

Blank lines and lines starting with ``#`` are ignored. Boundary edges that
are not listed are free.
"""

from ldgplates.mesh.formats.ldgmesh.decoder import Decoder
from ldgplates.mesh.formats.ldgmesh.decoder import DecodeError
from ldgplates.mesh.formats.ldgmesh.encoder import Encoder

MAGIC = 'ldgmesh'
VERSION = 'v1'


def decode(filename_or_stream):
    return Decoder(filename_or_stream)


def encode(filename_or_stream, mesh):
    return Encoder(filename_or_stream, mesh)
