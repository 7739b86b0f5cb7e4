from roman3.formats import write_x3c
from roman3.generators import gen_x3c
from ..base import GeneratorComponent

class X3CGenerator(GeneratorComponent):
    """X3C instance with a planted exact cover recorded in the file."""

    def generate(self) -> str:
        return write_x3c(gen_x3c(self.seed, self.config["q"], self.config["t"]))
