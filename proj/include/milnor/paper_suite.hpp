#ifndef MILNOR_PAPER_SUITE_HPP
#define MILNOR_PAPER_SUITE_HPP

#include <string>
#include <vector>

namespace milnor {

struct PaperCase {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Degree-6 parts of the two sextic germs; z^7 is added by the suite.
struct PaperFixtures {
  std::string f6;
  std::string g6;
  std::string f_graph;  // graph file paths
  std::string g_graph;
};

PaperFixtures default_fixtures(const std::string& data_dir);
std::vector<PaperCase> verify_paper(const PaperFixtures& fixtures);

}  // namespace milnor

#endif  // MILNOR_PAPER_SUITE_HPP
