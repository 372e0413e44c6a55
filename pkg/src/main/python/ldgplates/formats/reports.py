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

from google.protobuf import json_format


def write_message(filename_or_stream, message):
    '''Writes a report message as indented JSON with proto field names.'''
    text = json_format.MessageToJson(message, preserving_proto_field_name=True,
                                     sort_keys=True, indent=2)
    if isinstance(filename_or_stream, str):
        with io.open(filename_or_stream, 'w', encoding='utf-8') as stream:
            stream.write(text + '\n')
    elif hasattr(filename_or_stream, 'write'):
        filename_or_stream.write(text + '\n')
    else:
        raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))


def read_message(filename_or_stream, message_class):
    '''Parses a JSON report into a new `message_class` instance.

    :raises: :exc:`google.protobuf.json_format.ParseError`
    '''
    if isinstance(filename_or_stream, str):
        with io.open(filename_or_stream, 'r', encoding='utf-8') as stream:
            text = stream.read()
    else:
        text = filename_or_stream.read()
    return json_format.Parse(text, message_class())
