#pragma once

#include "ahtop/exact_sequences.hpp"
#include "ahtop/fundamental_group.hpp"
#include "ahtop/hom_graph.hpp"
#include "ahtop/io.hpp"
#include "ahtop/mapping_fiber.hpp"
#include "ahtop/paths_loops.hpp"

namespace ahtop {

Json to_json(const MapCheck& c);
Json to_json(const HomotopyResult& r);
Json to_json(const ClassTable& t);
Json to_json(const Path& p);
Json to_json(const SublengthReport& r);
Json to_json(const Presentation& p);
Json to_json(const AbelianInvariants& a);
Json to_json(const A1Report& r);
Json to_json(const LadderReport& r);
Json to_json(const ExactnessVerdict& v);
Json to_json(const AdjunctionReport& r);
Json to_json(const PuppeHypothesisReport& r);
Json to_json(const PuppeReport& r);

const char* to_string(SquareStatus s);

}  // namespace ahtop
