// Augmenting a blind prediction on the K_{2,5} graph.
//
// A predictor that returns the five leaves has recalled 5 of the 7 optimal
// nodes, yet the leaves induce no edges. Adding the eps/(1-eps)*|S| outside
// nodes best connected to the prediction recovers the whole graph.

#include <fstream>
#include <iostream>

#include "dsg/augmented.hpp"
#include "dsg/exact.hpp"
#include "dsg/graph.hpp"
#include "dsg/peeling.hpp"

int main(int argc, char** argv) {
  const char* path = argc > 1 ? argv[1] : "samples/k25.txt";
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return 1;
  }
  const dsg::Graph g = dsg::parse_edge_list(in, false);

  dsg::NodeSet leaves;
  {
    std::vector<dsg::node_t> ids;
    for (const char* y : {"y1", "y2", "y3", "y4", "y5"}) ids.push_back(g.index_of(y));
    leaves = dsg::NodeSet(ids);
  }

  const auto show = [&](const char* name, const dsg::NodeSet& s) {
    const dsg::Density d = dsg::density(g, s);
    std::cout << name << ": " << s.size() << " nodes, density " << d.numerator() << '/' << d.denominator()
              << " = " << d.value() << '\n';
  };
  show("prediction", leaves);
  show("augmented ", dsg::augment_undirected(g, leaves, 2.0 / 7.0));
  show("peeling   ", dsg::charikar_peel(g).nodes);
  show("exact     ", dsg::exact_densest_subgraph(g));
}
