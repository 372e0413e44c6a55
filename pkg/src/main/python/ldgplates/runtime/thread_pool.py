#!/usr/bin/env python
#
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

"""Small thread pool for element-wise work.

Work is split into chunks, each chunk becomes a work request picked up by the
next available worker thread, and results are collected by request id so the
caller always receives them in submission order. Reductions performed on the
returned list are therefore independent of the number of workers.

Basic usage::

  pool = ThreadPool(num_workers)
  results = pool.map(some_callable, list_of_chunks)
  pool.dismiss_workers()
"""

import os
import queue
import sys
import threading

from ldgplates.utils import logging

THREADS_ENV_VAR = 'LDG_THREADS'


class Error(Exception):
    pass


class WorkerError(Error):
    """A work request raised an exception inside a worker thread."""

    def __init__(self, request, exc_info):
        Error.__init__(self, 'Work request %d failed: %s'
                       % (request.request_id, exc_info[1]))
        self.exc_info = exc_info


def get_num_threads(default=1):
    """Returns the worker count configured by :data:`THREADS_ENV_VAR`."""
    value = os.environ.get(THREADS_ENV_VAR)
    if not value:
        return default
    try:
        num_threads = int(value)
    except ValueError:
        logging.warning('Ignore %s=%r: not an integer', THREADS_ENV_VAR, value)
        return default
    return max(1, num_threads)


class WorkRequest(object):
    """A callable with its arguments waiting in the request queue."""

    def __init__(self, callable_, args=None, kwds=None, request_id=0):
        self.request_id = request_id
        self.callable = callable_
        self.args = args or []
        self.kwds = kwds or {}
        self.exception = False

    def __str__(self):
        return '%s[id=%d, exception=%s]' % (self.__class__.__name__,
                                            self.request_id, self.exception)


class Worker(threading.Thread):
    """Background thread connected to the requests/results queues."""

    def __init__(self, requests_queue, results_queue, poll_timeout=0.5):
        threading.Thread.__init__(self)
        self.daemon = True
        self._requests_queue = requests_queue
        self._results_queue = results_queue
        self._poll_timeout = poll_timeout
        self._dismissed = threading.Event()
        self.start()

    def run(self):
        while not self._dismissed.is_set():
            try:
                request = self._requests_queue.get(True, self._poll_timeout)
            except queue.Empty:
                continue
            try:
                result = request.callable(*request.args, **request.kwds)
                self._results_queue.put((request, result))
            except Exception:
                request.exception = True
                self._results_queue.put((request, sys.exc_info()))

    def dismiss(self):
        self._dismissed.set()


class ThreadPool(object):
    """Distributes work requests over worker threads.

    With a single worker no thread is started and requests run inline.
    """

    def __init__(self, num_workers=None):
        if num_workers is None:
            num_workers = get_num_threads()
        if num_workers < 1:
            raise ValueError('num_workers must be positive: %d' % num_workers)
        self._num_workers = num_workers
        self._requests_queue = queue.Queue()
        self._results_queue = queue.Queue()
        self._workers = []
        if num_workers > 1:
            self._workers = [Worker(self._requests_queue, self._results_queue)
                             for _ in range(num_workers)]

    def get_num_workers(self):
        return self._num_workers

    def map(self, callable_, args_list):
        """Applies `callable_` to every item of `args_list`.

        :returns: A list of results in the order of `args_list`.
        :raises: :exc:`WorkerError` if any request failed.
        """
        if not self._workers:
            return [callable_(item) for item in args_list]
        for i, item in enumerate(args_list):
            self._requests_queue.put(WorkRequest(callable_, [item], request_id=i))
        results = [None] * len(args_list)
        failure = None
        for _ in range(len(args_list)):
            request, result = self._results_queue.get()
            if request.exception:
                failure = failure or WorkerError(request, result)
                continue
            results[request.request_id] = result
        if failure:
            raise failure
        return results

    def dismiss_workers(self):
        for worker in self._workers:
            worker.dismiss()
        for worker in self._workers:
            worker.join()
        self._workers = []

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.dismiss_workers()
        return False


def split_range(n, num_chunks):
    """Splits ``range(n)`` into at most `num_chunks` contiguous index arrays."""
    num_chunks = max(1, min(num_chunks, n))
    bounds = [n * i // num_chunks for i in range(num_chunks + 1)]
    return [range(bounds[i], bounds[i + 1]) for i in range(num_chunks)]
