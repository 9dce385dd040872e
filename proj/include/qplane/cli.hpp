#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qplane::cli {

struct Request {
  std::string command;
  std::string field = "generic";
  int adjoin = 1;
  std::string format = "json";
  std::optional<std::string> sigma;
  std::optional<std::string> rho;
  std::optional<std::string> dx;
  std::optional<std::string> dy;
  std::optional<std::string> w;  // derivation given as inner_from(w, sigma)
  std::vector<std::string> exprs;
};

struct Response {
  int exit_code = 0;
  std::string out;
  std::string err;
};

const std::vector<std::string>& commands();

/// Executes one request. Expressions equal to "-" are read from `in`.
Response run(const Request& req, std::istream& in);

}  // namespace qplane::cli
