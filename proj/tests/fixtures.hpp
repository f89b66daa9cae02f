#pragma once

#include <string>

#include "bei/graph_io.hpp"

inline bei::Graph fixture(const std::string& name) {
    return bei::read_graph_file(std::string(BEI_FIXTURE_DIR) + "/" + name);
}
