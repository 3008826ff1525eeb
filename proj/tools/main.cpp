// Command-line surface for the regular simplex gradient library.
//
// Subcommands: simplex, gradient, gradient-general, extrapolate,
// integer-simplex, sweep.  Exit codes: 0 success, 2 input/validation error,
// 3 numerical/regularity failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <simplexgrad/simplexgrad.hpp>

namespace sg = simplexgrad;

namespace {

struct CliConfig {
  int n = 0;
  std::string x0;
  double h = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double eta = 0.0;
  double rel_tol = sg::default_regularity_tol;
  double lipschitz = 2000.0;
  std::string orientation = "minus";
  std::string function;
  std::string values_file;
  std::string vertices_file;
  std::string centroid;
  std::string h_list;
  std::string output;
  int precision = 15;
  bool check_only = false;
  bool verbose = false;
};

sg::Orientation to_orientation(const std::string& name) {
  return name == "plus" ? sg::Orientation::Plus : sg::Orientation::Minus;
}

// --x0/--centroid arguments are either a comma-separated literal or a path
// to a file in the shared whitespace format.
std::vector<double> resolve_vector(const std::string& arg) {
  if (std::filesystem::exists(std::filesystem::path(arg))) {
    return sg::read_vector_file(arg);
  }
  return sg::parse_number_list(arg);
}

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::invalid_argument("cannot open output file: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

const sg::TestFunction& builtin_or_throw(const std::string& name) {
  const sg::TestFunction* f = sg::find_builtin(name);
  if (!f) {
    throw std::invalid_argument(
        "unknown function '" + name +
        "': expected rosenbrock, sphere, affine, expsum or values");
  }
  return *f;
}

void check_dimension_flag(const CliConfig& config, std::size_t n) {
  if (config.n != 0 && static_cast<std::size_t>(config.n) != n) {
    throw std::invalid_argument("--n disagrees with the supplied vector");
  }
}

void run_simplex(const CliConfig& config) {
  const std::vector<double> x0 = resolve_vector(config.x0);
  check_dimension_flag(config, x0.size());
  const auto n = x0.size();
  if (config.h == 0.0) {
    throw sg::DegenerateSimplexError("--h must be nonzero");
  }
  sg::AlignedRegularSimplex simplex{x0, config.h,
                                    to_orientation(config.orientation)};
  sg::Matrix<double> vertices(n, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const std::vector<double> v = sg::vertex(simplex, static_cast<int>(j) + 1);
    for (std::size_t i = 0; i < n; ++i) vertices(i, j) = v[i];
  }
  OutputTarget out(config.output);
  sg::write_matrix(out.stream(), vertices, config.precision);
}

sg::SampleSet values_from_file(const std::string& path, std::size_t n) {
  const std::vector<double> values = sg::read_vector_file(path);
  if (values.size() != n + 1) {
    throw sg::DimensionError("values file must hold exactly n+1 = " +
                             std::to_string(n + 1) + " numbers, got " +
                             std::to_string(values.size()));
  }
  return sg::SampleSet{values, std::nullopt};
}

void run_gradient(const CliConfig& config) {
  std::vector<double> x0;
  if (!config.x0.empty()) {
    x0 = resolve_vector(config.x0);
    check_dimension_flag(config, x0.size());
  } else if (config.n > 0) {
    x0.assign(static_cast<std::size_t>(config.n), 0.0);
  } else {
    throw std::invalid_argument("need --x0 (or --n in values mode)");
  }

  sg::AlignedRegularSimplex simplex{x0, config.h,
                                    to_orientation(config.orientation)};
  sg::SampleSet samples;
  if (config.function == "values") {
    if (config.values_file.empty()) {
      throw std::invalid_argument("--fn values requires --values FILE");
    }
    samples = values_from_file(config.values_file, x0.size());
  } else {
    const sg::TestFunction& f = builtin_or_throw(config.function);
    sg::detail::check_dimension(f, x0.size());
    samples = sg::sample_at_vertices(f.value, simplex);
  }
  const sg::GradientEstimate estimate = sg::aligned_gradient(simplex, samples);
  OutputTarget out(config.output);
  sg::write_vector(out.stream(), estimate.gradient, config.precision);
}

void run_gradient_general(const CliConfig& config) {
  sg::GeneralRegularSimplex simplex;
  simplex.vertices = sg::read_matrix_file(config.vertices_file);
  const std::size_t n = simplex.vertices.rows();
  if (simplex.vertices.cols() != n + 1) {
    throw sg::DimensionError("vertex matrix must be n x (n+1)");
  }
  check_dimension_flag(config, n);
  if (!config.centroid.empty()) simplex.centroid = resolve_vector(config.centroid);
  if (config.h != 0.0) simplex.h = config.h;

  sg::SampleSet samples;
  if (config.function == "values") {
    if (config.values_file.empty()) {
      throw std::invalid_argument("--fn values requires --values FILE");
    }
    samples = values_from_file(config.values_file, n);
  } else {
    const sg::TestFunction& f = builtin_or_throw(config.function);
    sg::detail::check_dimension(f, n);
    samples.values.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      samples.values[j] = f.value(simplex.vertices.col(j));
    }
  }
  const sg::GradientEstimate estimate =
      sg::general_gradient(simplex, samples, config.rel_tol);
  OutputTarget out(config.output);
  sg::write_vector(out.stream(), estimate.gradient, config.precision);
}

void run_extrapolate(const CliConfig& config, bool have_h2, bool have_eta) {
  if (config.function == "values") {
    throw std::invalid_argument(
        "extrapolate needs a built-in function (it evaluates 2(n+1) points)");
  }
  if (have_h2 == have_eta) {
    throw std::invalid_argument("supply exactly one of --h2 / --eta");
  }
  const std::vector<double> x0 = resolve_vector(config.x0);
  check_dimension_flag(config, x0.size());
  const sg::TestFunction& f = builtin_or_throw(config.function);
  sg::detail::check_dimension(f, x0.size());
  const double h2 = have_h2 ? config.h2 : config.eta * config.h1;

  const sg::Orientation orientation = to_orientation(config.orientation);
  OutputTarget out(config.output);
  if (config.verbose) {
    sg::AlignedRegularSimplex simplex{x0, config.h1, orientation};
    const sg::ExtrapolationPlan plan(config.h1, h2);
    const sg::GradientEstimate g1 =
        sg::aligned_gradient(simplex, sg::sample_at_vertices(f.value, simplex));
    simplex.h = plan.h2;
    const sg::GradientEstimate g2 =
        sg::aligned_gradient(simplex, sg::sample_at_vertices(f.value, simplex));
    const sg::GradientEstimate g12 =
        sg::richardson(g1.gradient, plan.h1, g2.gradient, plan.h2);
    out.stream() << "# g1 (h1 = " << sg::format_number(plan.h1, config.precision)
                 << ")\n";
    sg::write_vector(out.stream(), g1.gradient, config.precision);
    out.stream() << "# g2 (h2 = " << sg::format_number(plan.h2, config.precision)
                 << ")\n";
    sg::write_vector(out.stream(), g2.gradient, config.precision);
    out.stream() << "# g12\n";
    sg::write_vector(out.stream(), g12.gradient, config.precision);
    return;
  }
  const sg::GradientEstimate g12 =
      sg::extrapolated_gradient(f.value, x0, config.h1, h2, orientation);
  sg::write_vector(out.stream(), g12.gradient, config.precision);
}

void run_integer_simplex(const CliConfig& config) {
  OutputTarget out(config.output);
  if (config.check_only) {
    const bool feasible = sg::schoenberg_feasible(config.n);
    const long long np1 = static_cast<long long>(config.n) + 1;
    out.stream() << "n = " << config.n << ": integer regular simplex "
                 << (feasible ? "exists" : "does not exist") << "\n";
    out.stream() << "  n even and n+1 square: "
                 << (config.n % 2 == 0 && sg::detail::is_perfect_square(np1)
                         ? "yes"
                         : "no")
                 << "\n";
    out.stream() << "  n = 3 (mod 4): " << (config.n % 4 == 3 ? "yes" : "no")
                 << "\n";
    out.stream() << "  n = 1 (mod 4) and n+1 a sum of two squares: "
                 << (config.n % 4 == 1 && sg::detail::is_sum_of_two_squares(np1)
                         ? "yes"
                         : "no")
                 << "\n";
    return;
  }
  const sg::IntegerSimplex simplex =
      sg::integer_simplex(config.n, to_orientation(config.orientation));
  sg::write_matrix(out.stream(), simplex.vertices);
}

void run_sweep(const CliConfig& config) {
  if (config.function == "values") {
    throw std::invalid_argument("sweep needs a built-in function");
  }
  const std::vector<double> x0 = resolve_vector(config.x0);
  check_dimension_flag(config, x0.size());
  const sg::TestFunction& f = builtin_or_throw(config.function);
  const std::vector<double> h_values = sg::parse_number_list(config.h_list);
  const std::vector<sg::SweepRow> rows =
      sg::h_sweep(f, x0, to_orientation(config.orientation), h_values,
                  config.eta, config.lipschitz);
  OutputTarget out(config.output);
  out.stream() << "h1,err_g1,err_g2,err_g12,bound\n";
  for (const sg::SweepRow& row : rows) {
    out.stream() << sg::format_number(row.h1, config.precision) << ','
                 << sg::format_number(row.err_g1, config.precision) << ','
                 << sg::format_number(row.err_g2, config.precision) << ','
                 << sg::format_number(row.err_g12, config.precision) << ','
                 << sg::format_number(row.bound, config.precision) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular simplex construction and simplex gradient estimation"};
  // The radius option is spelled --h, so the help flag keeps only its long
  // form (subcommands inherit this before they are created).
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  CliConfig config;
  const auto orientation_check = CLI::IsMember({"minus", "plus"});

  CLI::App* simplex = app.add_subcommand(
      "simplex", "Print the vertices (as columns) of an aligned regular simplex");
  simplex->add_option("--n", config.n, "dimension (checked against --x0)");
  simplex->add_option("--x0", config.x0, "centroid: comma list or file")
      ->required();
  simplex->add_option("--h", config.h, "arm length (radius)")->required();
  simplex->add_option("--orientation", config.orientation, "minus|plus")
      ->check(orientation_check);
  simplex->add_option("--precision", config.precision, "printed decimals");
  simplex->add_option("--output", config.output, "write to file instead of stdout");
  simplex->callback([&] { run_simplex(config); });

  CLI::App* gradient = app.add_subcommand(
      "gradient", "O(n) simplex gradient on an aligned regular simplex");
  gradient->add_option("--fn", config.function,
                       "rosenbrock|sphere|affine|expsum|values")
      ->required();
  gradient->add_option("--x0", config.x0, "centroid: comma list or file");
  gradient->add_option("--n", config.n, "dimension (values mode)");
  gradient->add_option("--h", config.h, "arm length (radius)")->required();
  gradient->add_option("--orientation", config.orientation, "minus|plus")
      ->check(orientation_check);
  gradient->add_option("--values", config.values_file,
                       "file with n+1 vertex values (for --fn values)");
  gradient->add_option("--precision", config.precision, "printed decimals");
  gradient->add_option("--output", config.output, "write to file instead of stdout");
  gradient->callback([&] { run_gradient(config); });

  CLI::App* general = app.add_subcommand(
      "gradient-general",
      "O(n^2) simplex gradient for a regular simplex in general position");
  general->add_option("--vertices", config.vertices_file,
                      "file with the n x (n+1) vertex matrix")
      ->required();
  general->add_option("--fn", config.function,
                      "rosenbrock|sphere|affine|expsum|values")
      ->required();
  general->add_option("--values", config.values_file,
                      "file with n+1 vertex values (for --fn values)");
  general->add_option("--centroid", config.centroid,
                      "known centroid: comma list or file");
  general->add_option("--h", config.h, "known radius");
  general->add_option("--n", config.n, "dimension (checked)");
  general->add_option("--rel-tol", config.rel_tol,
                      "regularity gate tolerance (default 1e-8)");
  general->add_option("--precision", config.precision, "printed decimals");
  general->add_option("--output", config.output, "write to file instead of stdout");
  general->callback([&] { run_gradient_general(config); });

  CLI::App* extrapolate = app.add_subcommand(
      "extrapolate", "Second-order gradient from two radii (Richardson)");
  extrapolate->add_option("--fn", config.function,
                          "rosenbrock|sphere|affine|expsum")
      ->required();
  extrapolate->add_option("--x0", config.x0, "centroid: comma list or file")
      ->required();
  extrapolate->add_option("--h1", config.h1, "first radius")->required();
  CLI::Option* h2_opt =
      extrapolate->add_option("--h2", config.h2, "second radius");
  CLI::Option* eta_opt = extrapolate->add_option(
      "--eta", config.eta, "radius ratio h2/h1 (alternative to --h2)");
  h2_opt->excludes(eta_opt);
  extrapolate->add_option("--orientation", config.orientation, "minus|plus")
      ->check(orientation_check);
  extrapolate->add_flag("--verbose", config.verbose,
                        "also print the two first-order estimates");
  extrapolate->add_option("--precision", config.precision, "printed decimals");
  extrapolate->add_option("--output", config.output,
                          "write to file instead of stdout");
  extrapolate->callback([&] {
    run_extrapolate(config, h2_opt->count() > 0, eta_opt->count() > 0);
  });

  CLI::App* integer = app.add_subcommand(
      "integer-simplex", "Exact integer coordinates for a regular simplex");
  integer->add_option("--n", config.n, "dimension")->required();
  integer->add_option("--orientation", config.orientation, "minus|plus")
      ->check(orientation_check);
  integer->add_flag("--check", config.check_only,
                    "report Schoenberg feasibility instead of constructing");
  integer->add_option("--output", config.output, "write to file instead of stdout");
  integer->callback([&] { run_integer_simplex(config); });

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Accuracy-versus-radius sweep, CSV on stdout");
  sweep->add_option("--fn", config.function, "rosenbrock|sphere|affine|expsum")
      ->required();
  sweep->add_option("--x0", config.x0, "centroid: comma list or file")
      ->required();
  sweep->add_option("--h-list", config.h_list, "comma-separated radii")
      ->required();
  sweep->add_option("--eta", config.eta, "radius ratio h2/h1 (default 0.5)")
      ->default_val(0.5);
  sweep->add_option("--L", config.lipschitz,
                    "Lipschitz constant for the bound column (default 2000)");
  sweep->add_option("--orientation", config.orientation, "minus|plus")
      ->check(orientation_check);
  sweep->add_option("--precision", config.precision, "printed decimals");
  sweep->add_option("--output", config.output, "write to file instead of stdout");
  sweep->callback([&] { run_sweep(config); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const sg::RegularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sg::SingularSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const sg::EvaluationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
