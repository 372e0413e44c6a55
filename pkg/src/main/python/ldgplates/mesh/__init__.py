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

from ldgplates.mesh.mesh import *
from ldgplates.mesh.element_map import ElementMap
from ldgplates.mesh.structured import build_structured_mesh
from ldgplates.mesh.structured import parse_structured_spec
from ldgplates.mesh.structured import refine_uniformly
from ldgplates.mesh.formats import ldgmesh


def load_mesh(filename_or_stream):
    '''Reads a mesh in the native text format.

    :raises: :exc:`~ldgplates.mesh.formats.ldgmesh.DecodeError`
    '''
    return ldgmesh.decode(filename_or_stream).get_mesh()


def save_mesh(filename_or_stream, mesh):
    ldgmesh.encode(filename_or_stream, mesh)
