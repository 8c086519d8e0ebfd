# -*- coding: utf-8 -*-

"""
moodal.executor

This module implements a SweepExecutor, which fans a sequence of independent
checks out over a thread pool and merges the results back in input order.
"""
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class SweepExecutor(object):
    def __init__(self, workers: int = 1):
        """
        Initialises a SweepExecutor.

        :param workers: Number of threads; 1 runs everything in the calling thread.
        """
        self.logger = logging.getLogger(__name__)
        self.num_threads = max(1, int(workers or 1))

    def chunks(self, items: Sequence[T]) -> List[Sequence[T]]:
        """
        Splits ``items`` into contiguous chunks, one per thread.
        """
        if not items:
            return []
        size = -(-len(items) // self.num_threads)
        return [items[start : start + size] for start in range(0, len(items), size)]

    def map(self, func: Callable[[Sequence[T]], List[R]], items: Sequence[T]) -> List[R]:
        """
        Calls ``func`` once per chunk of ``items`` and concatenates the
        per-chunk result lists in chunk order.

        ``func`` receives a whole chunk so that it can build per-thread state
        (such as an evaluator with its memo table) once per chunk.

        :param func: Callable taking a chunk and returning a list of results.
        :param items: The work items.
        :returns: Results in input order.
        """
        chunks = self.chunks(items)
        if self.num_threads == 1 or len(chunks) <= 1:
            return [result for chunk in chunks for result in func(chunk)]

        self.logger.debug(
            "Running %d items on %d threads", len(items), self.num_threads
        )
        responses = {}
        with ThreadPoolExecutor(max_workers=self.num_threads) as executor:
            futures = {
                executor.submit(func, chunk): index for index, chunk in enumerate(chunks)
            }
            for future in as_completed(futures):
                responses[futures[future]] = future.result()

        return [result for index in sorted(responses) for result in responses[index]]

    def first(
        self, predicate: Callable[[T], bool], items: Sequence[T]
    ) -> Optional[int]:
        """
        Returns the lowest index whose item satisfies ``predicate``, or None.
        The answer does not depend on thread scheduling.
        """

        def run(chunk_with_offsets):
            return [
                offset
                for offset, item in chunk_with_offsets
                if predicate(item)
            ][:1]

        indexed = list(enumerate(items))
        hits = self.map(run, indexed) if indexed else []
        return min(hits) if hits else None
