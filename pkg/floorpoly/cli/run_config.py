""" Module to represent the parameters of one command line run """
import argparse

from typing import Optional


class RunConfig(object):
    """ The command, its parameters, seed, precision cap, output path and format of a run """
    OUTPUT_FORMATS = ('json', 'csv', 'text')
    IGNORED = ('verbose', 'quiet', 'handler')

    def __init__(self, command: str, parameters: dict, seed: Optional[int] = None, precision_cap: Optional[int] = None,
                 output: Optional[str] = None, output_format: str = 'text'):
        self.command: str = command
        self.parameters: dict = parameters
        self.seed: Optional[int] = seed
        self.precision_cap: Optional[int] = precision_cap
        self.output: Optional[str] = output
        self.output_format: str = output_format

        if output_format not in self.OUTPUT_FORMATS:
            raise ValueError(f"Expected Config Error || unknown output format `{output_format}`")

    def __repr__(self):
        return f'RunConfig({self.command}, seed={self.seed})'

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> 'RunConfig':
        """ Build the run config from parsed arguments """
        values = {key: value for key, value in vars(namespace).items() if key not in cls.IGNORED}
        command = values.pop('command')
        seed = values.pop('seed', None)
        precision_cap = values.pop('precision_cap', None)
        output = values.pop('output', None)
        output_format = values.pop('format', None) or 'text'

        return cls(command, values, seed, precision_cap, output, output_format)

    def to_dict(self) -> dict:
        return dict(command=self.command, parameters=self.parameters, seed=self.seed,
                    precision_cap=self.precision_cap, output=self.output, format=self.output_format)
