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

"""Coordinate text dumps of sparse matrices, one ``row col value`` per line."""

import io

import numpy
from scipy import sparse


def _open(filename_or_stream, mode):
    if isinstance(filename_or_stream, str):
        return io.open(filename_or_stream, mode, encoding='utf-8'), True
    if hasattr(filename_or_stream, 'write' if mode == 'w' else 'read'):
        return filename_or_stream, False
    raise TypeError('Expected a filename or a stream: %r' % (filename_or_stream,))


def dump_matrix(filename_or_stream, matrix):
    matrix = sparse.coo_matrix(matrix)
    stream, owned = _open(filename_or_stream, 'w')
    try:
        for i, j, value in zip(matrix.row, matrix.col, matrix.data):
            stream.write('%d %d %.17g\n' % (i, j, value))
    finally:
        if owned:
            stream.close()


def load_matrix(filename_or_stream, shape=None):
    '''Reads triplets written by :func:`dump_matrix`.

    :param shape: Matrix shape, inferred from the largest indices if omitted.
    '''
    stream, owned = _open(filename_or_stream, 'r')
    try:
        rows, cols, values = [], [], []
        for line in stream:
            fields = line.split()
            if not fields:
                continue
            rows.append(int(fields[0]))
            cols.append(int(fields[1]))
            values.append(float(fields[2]))
    finally:
        if owned:
            stream.close()
    if shape is None:
        shape = (max(rows, default=-1) + 1, max(cols, default=-1) + 1)
    return sparse.coo_matrix((numpy.array(values), (numpy.array(rows, dtype=int),
                                                    numpy.array(cols, dtype=int))),
                             shape=shape).tocsr()
