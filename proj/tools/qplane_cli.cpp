#include <qplane/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  qplane::cli::Request req;
  CLI::App app{"Exact computations in the quantum plane K_q[x,y]"};
  app.add_option("command", req.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(qplane::cli::commands()));
  app.add_option("exprs", req.exprs, "Expression arguments ('-' reads stdin)");
  app.add_option("--field", req.field, "generic | cyclotomic:<t>")->capture_default_str();
  app.add_option("--adjoin", req.adjoin, "Adjoin primitive N-th roots of unity, written z")->capture_default_str();
  app.add_option("--format", req.format, "json | text")->capture_default_str();
  app.add_option("--sigma", req.sigma, "Twisting automorphism, toric:<a>,<b> or flip:<a>,<b>");
  app.add_option("--rho", req.rho, "Automorphism to test");
  app.add_option("--dx", req.dx, "Image of x");
  app.add_option("--dy", req.dy, "Image of y");
  app.add_option("--w", req.w, "Use the inner derivation induced by w");
  CLI11_PARSE(app, argc, argv);

  const qplane::cli::Response r = qplane::cli::run(req, std::cin);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
