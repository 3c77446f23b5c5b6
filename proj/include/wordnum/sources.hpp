#pragma once

#include <string>
#include <vector>

#include "wordnum/reals.hpp"
#include "wordnum/words.hpp"

namespace wordnum {

// Descriptors: sqrt:D, rational:P/Q, lacunary:2^n|n!|fib, stoneham:A,G,
// champernowne:G, copeland-erdos:G, bbp:NAME, eta, pi, zeta3.
SourcePtr parse_source(const std::string& descriptor);
std::vector<std::string> source_descriptor_help();

// Named infinite words:
//   fib            morphism fixed point over {a,b}
//   ptm            automaton word over {0,1}
//   baum_sweet     automaton word over {0,1}
//   paper_fold     automaton word over {0,1}
//   rudin_shapiro  counting definition over {a,b}
//   eta            morphism fixed point over {0,1,2}
//   powers2        indicator of the powers of two among n = 1, 2, 3, ...
//   powers2_auto   automaton word (positions n = 0, 1, 2, ...)
//   rabbit         Zeckendorf parity word over {A,Y}, position n = R_{n+1}
//   danilov        rabbit word under A -> 0, Y -> 1
StreamPtr named_stream(const std::string& name);
std::vector<std::string> named_stream_catalog();

}  // namespace wordnum
