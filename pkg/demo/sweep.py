# ncschur, noncommutative Schur functions for (3+1)-free posets.
# Copyright (c) 2024-Present, ncschur Contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the following licenses:
# - The Unlicense
# - GNU Affero General Public License v3.0 or later
# - GNU General Public License v2.0 or later
# - BSD 4-Clause "Original" or "Old" License
# - MIT License
# - Apache License 2.0

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the LICENSE file for more details.

import logging
import os

from ncschur import Config, Scope, save, sweep


class SweepConfig(Config):
    # Fields need a type annotation to become flags
    max_size: int = 4
    checks: str = "newton,reading,e-commute"
    threads: int = 1
    report: str = "report.yaml"
    max_content: int = 3
    max_degree: int = 4
    with_t: bool = False

    def post(self):
        if self.threads < 1:
            self.threads = os.cpu_count() or 1

    def scope(self) -> Scope:
        return Scope(max_content=self.max_content, max_degree=self.max_degree, with_t=self.with_t)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    # python demo/sweep.py --config demo/sweep.yaml --threads 0
    config = SweepConfig().parse()
    config.freeze()
    print(config.dict())
    result = sweep(config.max_size, config.checks, config.scope(), config.threads)
    dir_path = os.path.dirname(os.path.realpath(__file__))
    save(result, os.path.join(dir_path, config.report))
    print(result.status, len(result.details))
