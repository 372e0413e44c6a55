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

from ldgplates import config


class CommandBase(object):

    def __init__(self, args):
        self._args = args

    @classmethod
    def setup_argparser(cls, argparser):
        if hasattr(cls, 'default_arguments'):
            for name, kwargs in cls.default_arguments:
                argparser.add_argument(name, **kwargs)
            return
        raise NotImplementedError()

    def load_parameters(self):
        '''Reads ``args.config`` and applies the ``--output`` override.'''
        params = config.load_parameters(self._args.config)
        output = getattr(self._args, 'output', None)
        if output is not None:
            params.output.directory = output
        return params

    def run(self):
        raise NotImplementedError()

    def cleanup(self):
        pass
