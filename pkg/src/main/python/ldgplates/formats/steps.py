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

import csv
import io

from ldgplates.parameters import parameters_pb2

COLUMNS = ('stage', 'step', 'E_h', 'E_s', 'E_b', 'D_h', 'incr_norm', 'tau', 'kkt_residual')
STUDY_COLUMNS = ('level', 'h_max', 'hessian_error', 'hessian_rate', 'defect',
                 'defect_rate', 'energy', 'flow_energy', 'flow_defect',
                 'flow_defect_rate', 'boundary_jump', 'beta')


class StepsEncoder(object):
    """Writes step records as CSV with a header row.

    Floating point columns carry 17 significant digits.

    :param filename_or_stream: A filename or a text stream.
    :param records: Optional iterable of
      :class:`~ldgplates.parameters.parameters_pb2.StepRecord` written at once.
    """

    columns = COLUMNS
    record_class = parameters_pb2.StepRecord

    def __init__(self, filename_or_stream, records=None):
        self._owns_stream = False
        if isinstance(filename_or_stream, str):
            self._stream = io.open(filename_or_stream, 'w', encoding='utf-8', newline='')
            self._owns_stream = True
        elif hasattr(filename_or_stream, 'write'):
            self._stream = filename_or_stream
        else:
            raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))
        self._writer = csv.writer(self._stream, lineterminator='\n')
        self._writer.writerow(self.columns)
        if records is not None:
            self.encode(records)
            self.close()

    def encode_record(self, record):
        if not isinstance(record, self.record_class):
            raise TypeError('Expected a %s: %s' % (self.record_class.__name__, type(record)))
        row = []
        for name in self.columns:
            value = getattr(record, name)
            row.append('%.17g' % value if isinstance(value, float) else value)
        self._writer.writerow(row)

    def encode(self, records):
        for record in records:
            self.encode_record(record)

    def close(self):
        if self._owns_stream:
            self._stream.close()


class StudyEncoder(StepsEncoder):
    """Writes refinement rows as CSV."""

    columns = STUDY_COLUMNS
    record_class = parameters_pb2.RefinementRow
