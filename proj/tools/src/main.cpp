#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dispatch.hpp"
#include "lpcoh/json_io.hpp"

int main(int argc, char** argv) {
  // Optional database override, validated before anything runs.
  static lpcoh::MultDatabase override_db;
  if (const char* path = std::getenv("LPCOH_DB")) {
    try {
      std::ifstream in(path);
      if (!in) throw lpcoh::DomainError(lpcoh::ErrorKind::InvalidDatabase,
                                        std::string("cannot open '") + path + "'");
      lpcoh::json parsed;
      in >> parsed;
      override_db = lpcoh::database_from_json(parsed);
      lpcoh::validate_database(override_db);
      lpcoh::set_active_database(&override_db);
    } catch (const std::exception& e) {
      std::cerr << "LPCOH_DB: " << e.what() << "\n";
      return 1;
    }
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  return lpcoh::cli::dispatch(args, std::cout, std::cerr);
}
