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
from ldgplates.utils import logging

COMMENT = '#'
TRUE_VALUES = ('true', 'yes', 'on', '1')
FALSE_VALUES = ('false', 'no', 'off', '0')

_F = descriptor.FieldDescriptor


class Error(Exception):

    def __init__(self, line_number, message):
        Exception.__init__(self, 'line %d: %s' % (line_number, message))
        self.line_number = line_number


def parse_enum(enum_type, text):
    '''Returns the number of the enum value named `text`.

    :raises: :exc:`ValueError`
    '''
    name = text.strip().upper()
    for value in enum_type.values:
        if value.name == name or value.name.split('_', 1)[-1] == name:
            return value.number
    raise ValueError('expected one of %s' % ', '.join(v.name.lower() for v in enum_type.values))


def parse_value(field, text):
    '''Converts `text` by the type of the protobuf `field`.

    :raises: :exc:`ValueError`
    '''
    if field.type == _F.TYPE_STRING:
        return text
    if field.type == _F.TYPE_BOOL:
        lowered = text.lower()
        if lowered in TRUE_VALUES:
            return True
        if lowered in FALSE_VALUES:
            return False
        raise ValueError('expected a boolean')
    if field.type == _F.TYPE_ENUM:
        return parse_enum(field.enum_type, text)
    if field.type in (_F.TYPE_INT32, _F.TYPE_INT64):
        return int(text)
    if field.type in (_F.TYPE_DOUBLE, _F.TYPE_FLOAT):
        return float(text)
    raise ValueError('unsupported field type %d' % field.type)


class Decoder(object):
    """Decodes a run configuration.

    :param filename_or_stream: A filename, an open text stream or ``None``.
    """

    def __init__(self, filename_or_stream=None):
        self._params = parameters.RunParameters()
        if filename_or_stream is not None:
            self.decode(filename_or_stream)

    def decode(self, filename_or_stream):
        '''Parses a file or stream.

        :raises: :exc:`Error`, :exc:`TypeError`
        '''
        if isinstance(filename_or_stream, str):
            with io.open(filename_or_stream, 'r', encoding='utf-8') as stream:
                data = stream.read()
        elif hasattr(filename_or_stream, 'read'):
            data = filename_or_stream.read()
        else:
            raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))
        if isinstance(data, bytes):
            data = data.decode('utf-8')
        return self.decode_from_string(data)

    def decode_from_string(self, data):
        if not isinstance(data, str):
            raise TypeError('data must be a string: %s' % type(data))
        section = None
        seen = set()
        for n, line in enumerate(data.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith(COMMENT):
                continue
            if line.startswith('['):
                if not line.endswith(']'):
                    raise Error(n, 'unterminated section header: %s' % line)
                name = line[1:-1].strip()
                if name not in parameters.SECTIONS:
                    raise Error(n, 'unknown section: %s' % name)
                section = self._params.get_section(name)
                continue
            if '=' not in line:
                raise Error(n, 'expected "key = value": %s' % line)
            if section is None:
                raise Error(n, 'key outside of a section: %s' % line)
            key, value = [part.strip() for part in line.split('=', 1)]
            self._decode_entry(n, section, key, value)
            entry = (section.DESCRIPTOR.name, key)
            if entry in seen:
                logging.warning('line %d: %s overrides an earlier value', n, key)
            seen.add(entry)
        return self._params

    def _decode_entry(self, n, section, key, value):
        field = section.DESCRIPTOR.fields_by_name.get(key)
        if field is None or field.type == _F.TYPE_MESSAGE:
            raise Error(n, 'unknown key "%s" in section %s' % (key, section.DESCRIPTOR.name))
        try:
            setattr(section, key, parse_value(field, value))
        except ValueError as e:
            raise Error(n, 'invalid value for %s: %s (%s)' % (key, value, e))

    def get_parameters(self):
        return self._params


def apply_override(params, assignment):
    '''Sets one ``section.key=value`` assignment on `params` in place.

    :raises: :exc:`ValueError`
    '''
    if '=' not in assignment:
        raise ValueError('expected "section.key=value": %s' % assignment)
    name, value = [part.strip() for part in assignment.split('=', 1)]
    if name.count('.') != 1:
        raise ValueError('expected "section.key": %s' % name)
    section_name, key = name.split('.')
    if section_name not in parameters.SECTIONS:
        raise ValueError('unknown section: %s' % section_name)
    section = params.get_section(section_name)
    field = section.DESCRIPTOR.fields_by_name.get(key)
    if field is None or field.type == _F.TYPE_MESSAGE:
        raise ValueError('unknown key "%s" in section %s' % (key, section_name))
    setattr(section, key, parse_value(field, value))
    return params
