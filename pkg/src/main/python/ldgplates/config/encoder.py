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

import io

from google.protobuf import descriptor

from ldgplates import parameters

_F = descriptor.FieldDescriptor


def format_value(field, value):
    if field.type == _F.TYPE_BOOL:
        return 'true' if value else 'false'
    if field.type == _F.TYPE_ENUM:
        return field.enum_type.values_by_number[value].name.lower()
    if field.type in (_F.TYPE_DOUBLE, _F.TYPE_FLOAT):
        return '%.17g' % value
    return str(value)


class Encoder(object):
    """Writes every field of :class:`~ldgplates.parameters.RunParameters`,
    defaults included, as a configuration file.
    """

    def __init__(self, filename_or_stream, params=None):
        self._stream = None
        self._owns_stream = False
        if isinstance(filename_or_stream, str):
            self._stream = io.open(filename_or_stream, 'w', encoding='utf-8')
            self._owns_stream = True
        elif hasattr(filename_or_stream, 'write'):
            self._stream = filename_or_stream
        else:
            raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))
        if params is not None:
            self.encode(params)

    def encode(self, params):
        if not isinstance(params, parameters.RunParameters):
            raise TypeError('params must be RunParameters: %s' % type(params))
        write = self._stream.write
        for i, name in enumerate(parameters.SECTIONS):
            section = params.get_section(name)
            if i:
                write('\n')
            write('[%s]\n' % name)
            for field in section.DESCRIPTOR.fields:
                write('%s = %s\n' % (field.name,
                                     format_value(field, getattr(section, field.name))))
        if self._owns_stream:
            self._stream.close()
