// torsionforge: build 2-complexes with large torsion and certify them.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "torsionforge/disc_complex.hpp"
#include "torsionforge/exactmat.hpp"
#include "torsionforge/hadamard.hpp"
#include "torsionforge/hmt.hpp"
#include "torsionforge/homology.hpp"
#include "torsionforge/matrix_io.hpp"
#include "torsionforge/speyer.hpp"
#include "torsionforge/triangulation.hpp"
#include "torsionforge/valid_sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace tf = torsionforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tf::InputError("cannot write '" + path + "'");
  out << text;
}

std::string format_complex(const tf::SimplicialComplex2& k, const std::string& format) {
  return format == "json" ? tf::format_complex_json(k) : tf::format_facets(k);
}

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TORSIONFORGE_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) workers = std::min(workers, static_cast<unsigned>(cap));
  }
  return workers;
}

std::string factors_text(const std::vector<tf::BigInt>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ' ';
    out += f.get_str();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct 2-complexes with large torsion in H1 and certify them exactly"};
  app.require_subcommand(1);

  std::string output;
  std::string format = "facets";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Complex output format")
        ->check(CLI::IsMember({"facets", "json"}));
  };

  std::size_t n = 0;
  bool augment = false;
  bool json = false;
  auto* walsh_cmd = app.add_subcommand("walsh", "Walsh-Hadamard matrix H(n)");
  walsh_cmd->add_option("--n", n, "Order, a power of two")->required();
  walsh_cmd->add_flag("--augment", augment, "Emit the augmented 2n x 2n matrix");
  walsh_cmd->add_flag("--json", json, "Emit {\"rows\": ...} instead of the text format");
  walsh_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string check_file;
  std::string matrix_file;
  auto* seq_cmd = app.add_subcommand("valid-seq", "Valid sequence for H(n), or check one");
  seq_cmd->add_option("--n", n, "Order, a power of two");
  seq_cmd->add_option("--check", check_file, "Sequence file to check");
  seq_cmd->add_option("--matrix", matrix_file, "+-1 matrix to check against (default H(n))");
  seq_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  bool keep_first_digon = false;
  auto* hmt_cmd = app.add_subcommand("build-hmt", "Triangulation HMT(n)");
  hmt_cmd->add_option("--n", n, "Order, a power of two >= 2")->required();
  hmt_cmd->add_flag("--keep-first-digon", keep_first_digon, "Keep digon 1 (5n+1 vertices)");
  add_format(hmt_cmd);
  hmt_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string k_text;
  auto* speyer_cmd = app.add_subcommand("build-speyer", "Triangulated complex K(k) with torsion Z_k");
  speyer_cmd->add_option("--k", k_text, "Integer k >= 2")->required();
  add_format(speyer_cmd);
  speyer_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string ordering = "grouped";
  auto* tri_cmd = app.add_subcommand("triangulate", "Generic triangulation of a matrix disc complex");
  tri_cmd->add_option("--matrix", matrix_file, "Matrix file ('-' for stdin)")->required();
  tri_cmd->add_option("--ordering", ordering, "Boundary word ordering")
      ->check(CLI::IsMember({"grouped", "interleaved"}));
  add_format(tri_cmd);
  tri_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string complex_file = "-";
  auto* hom_cmd = app.add_subcommand("homology", "Integer simplicial homology of a complex");
  hom_cmd->add_option("--complex", complex_file, "Facet or JSON complex file (default stdin)");
  hom_cmd->add_flag("--json", json, "Structured output");
  hom_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  bool transforms = false;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--matrix", matrix_file, "Matrix file ('-' for stdin)")->required();
  snf_cmd->add_flag("--transforms", transforms, "Also emit s, a, t with m = s a t");
  snf_cmd->add_flag("--json", json, "Structured output");
  snf_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<std::size_t> certify_ns;
  auto* cert_cmd = app.add_subcommand("certify", "Build HMT(n) and verify it against the closed forms");
  cert_cmd->add_option("--n", certify_ns, "One or more orders, powers of two >= 2")->required();
  cert_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::size_t max_n = 512;
  double min_seconds = 0.05;
  auto* bench_cmd = app.add_subcommand("bench", "Construction time of HMT(n) against n");
  bench_cmd->add_option("--max-n", max_n, "Largest order, a power of two");
  bench_cmd->add_option("--min-seconds", min_seconds, "Accumulated time per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*walsh_cmd) {
      tf::IntMatrix h = tf::walsh(n);
      if (augment) h = tf::augment(h);
      emit(json ? tf::format_matrix_json(h) : tf::format_matrix(h), output);
      return kExitOk;
    }

    if (*seq_cmd) {
      if (check_file.empty()) {
        if (n == 0) throw tf::InputError("valid-seq: give --n, or --check with --matrix");
        emit(tf::format_sequence(tf::valid_sequence(n)), output);
        return kExitOk;
      }
      auto seq = tf::parse_sequence(tf::read_text(check_file));
      tf::IntMatrix m;
      if (!matrix_file.empty()) {
        m = tf::read_matrix(matrix_file);
      } else if (n != 0) {
        m = tf::walsh(n);
      } else {
        m = tf::walsh(seq.n);
      }
      auto report = tf::check_valid(seq, m);
      emit(report.to_string() + "\n", output);
      return report.ok() ? kExitOk : kExitFailed;
    }

    if (*hmt_cmd) {
      tf::HmtOptions options;
      options.keep_first_digon = keep_first_digon;
      emit(format_complex(tf::build_hmt(n, options), format), output);
      return kExitOk;
    }

    if (*speyer_cmd) {
      tf::BigInt k;
      if (k.set_str(k_text, 10) != 0) throw tf::InputError("--k: '" + k_text + "' is not an integer");
      emit(format_complex(tf::build_speyer_complex(k), format), output);
      return kExitOk;
    }

    if (*tri_cmd) {
      auto m = tf::read_matrix(matrix_file);
      auto spec = tf::from_matrix(m, tf::parse_ordering(ordering));
      emit(format_complex(tf::triangulate_generic(spec), format), output);
      return kExitOk;
    }

    if (*hom_cmd) {
      auto k = tf::parse_complex(tf::read_text(complex_file));
      auto h = tf::simplicial_homology(k);
      emit(json ? h.to_json() : h.to_string(), output);
      return kExitOk;
    }

    if (*snf_cmd) {
      auto m = tf::read_matrix(matrix_file);
      tf::SnfOptions options;
      options.transforms = transforms;
      auto snf = tf::smith_normal_form(m, options);
      std::string text;
      if (json) {
        nlohmann::json doc;
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : snf.invariant_factors) factors.push_back(f.get_str());
        doc["invariant_factors"] = factors;
        doc["rank"] = snf.rank();
        if (transforms) {
          doc["s"] = nlohmann::json::parse(tf::format_matrix_json(snf.s))["rows"];
          doc["a"] = nlohmann::json::parse(tf::format_matrix_json(snf.a))["rows"];
          doc["t"] = nlohmann::json::parse(tf::format_matrix_json(snf.t))["rows"];
        }
        text = doc.dump(2) + "\n";
      } else {
        text = "invariant_factors: " + factors_text(snf.invariant_factors) + "\n";
        if (transforms) {
          text += "s:\n" + tf::format_matrix(snf.s);
          text += "a:\n" + tf::format_matrix(snf.a);
          text += "t:\n" + tf::format_matrix(snf.t);
        }
      }
      emit(text, output);
      return kExitOk;
    }

    if (*cert_cmd) {
      for (std::size_t value : certify_ns) {
        if (!tf::is_power_of_two(value) || value < 2) {
          throw tf::InputError("certify: n = " + std::to_string(value) +
                               " must be a power of two >= 2 (HMT(1) is a single disc, not built)");
        }
      }
      std::vector<tf::HmtCertificate> certs(certify_ns.size());
      std::size_t next = 0;
      std::mutex lock;
      std::exception_ptr error;
      auto work = [&] {
        for (;;) {
          std::size_t idx;
          {
            std::lock_guard guard(lock);
            if (next >= certify_ns.size() || error) return;
            idx = next++;
          }
          try {
            certs[idx] = tf::hmt_certificate(certify_ns[idx]);
          } catch (...) {
            std::lock_guard guard(lock);
            error = std::current_exception();
          }
        }
      };
      const unsigned workers =
          std::min<unsigned>(worker_count(), static_cast<unsigned>(certify_ns.size()));
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
      work();
      for (auto& t : pool) t.join();
      if (error) std::rethrow_exception(error);

      std::string text;
      bool all_pass = true;
      for (const auto& cert : certs) {
        text += cert.to_json();
        all_pass = all_pass && cert.pass;
      }
      emit(text, output);
      return all_pass ? kExitOk : kExitFailed;
    }

    if (*bench_cmd) {
      auto samples = tf::hmt_scaling(max_n, min_seconds);
      std::printf("%8s %14s %10s\n", "n", "seconds", "t(n)/t(n/2)");
      double ratio_sum = 0.0;
      int ratio_count = 0;
      for (const auto& s : samples) {
        if (s.ratio > 0) {
          std::printf("%8zu %14.6e %10.2f\n", s.n, s.seconds, s.ratio);
          ratio_sum += s.ratio;
          ++ratio_count;
        } else {
          std::printf("%8zu %14.6e %10s\n", s.n, s.seconds, "-");
        }
      }
      if (ratio_count > 0) {
        std::printf("mean doubling ratio: %.2f (quadratic scaling gives 4)\n", ratio_sum / ratio_count);
      }
      return kExitOk;
    }
  } catch (const tf::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tf::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}
