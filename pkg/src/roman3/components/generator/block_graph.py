from roman3.formats import write_graph
from roman3.generators import gen_block_graph, gen_tree
from ..base import GeneratorComponent

class BlockGraphGenerator(GeneratorComponent):
    """Random connected block graph grown from cliques of size 2..max_block_size."""

    def generate(self) -> str:
        g = gen_block_graph(self.seed, self.config["n"], self.config.get("max_block_size", 4))
        return write_graph(g)

class TreeGenerator(GeneratorComponent):
    def generate(self) -> str:
        return write_graph(gen_tree(self.seed, self.config["n"]))
