// Command-line driver for the canext shared library. All functionality goes
// through the C API in canext.h.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "canext.h"

namespace {

int usage() {
  std::cerr <<
      "usage: canext <command> [options]\n"
      "\n"
      "commands:\n"
      "  check --in FILE                       validate a document\n"
      "  complete (--filters|--ideals) --in FILE   filter/ideal completion\n"
      "  present close --in FILE --set a,b     C-ideal closure of a set\n"
      "  present enumerate --in FILE           list all C-ideals\n"
      "  present free --in FILE                free dcpo carrier\n"
      "  present verify-universal --in FILE --target FILE\n"
      "  canon ext --in FILE                   canonical extension carrier\n"
      "  canon verify --in FILE                density/compactness report\n"
      "  canon check-eq --in FILE --ineq \"(leq s t)\"\n"
      "  corpus run                            run every acceptance property\n"
      "  emit dot --in FILE                    Hasse diagram as DOT\n"
      "\n"
      "options: --in FILE  --out FILE  --target FILE  --set CSV  --ineq TEXT\n"
      "         --seed N  --max-size N  --json\n";
  return CANEXT_ERROR;
}

struct Args {
  std::string command;
  std::string verb;
  std::string in, out, target, set, ineq;
  canext_opts opts;
};

bool parseArgs(int argc, char** argv, Args& args) {
  canext_opts_init(&args.opts);
  int i = 1;
  if (i < argc && argv[i][0] != '-') args.command = argv[i++];
  if (i < argc && argv[i][0] != '-') args.verb = argv[i++];
  for (; i < argc; ++i) {
    std::string a = argv[i];
    auto value = [&](std::string& slot) {
      if (i + 1 >= argc) return false;
      slot = argv[++i];
      return true;
    };
    if (a == "--in") {
      if (!value(args.in)) return false;
    } else if (a == "--out") {
      if (!value(args.out)) return false;
    } else if (a == "--target") {
      if (!value(args.target)) return false;
    } else if (a == "--set") {
      if (!value(args.set)) return false;
    } else if (a == "--ineq") {
      if (!value(args.ineq)) return false;
    } else if (a == "--seed") {
      std::string v;
      if (!value(v)) return false;
      args.opts.seed = std::stoull(v);
    } else if (a == "--max-size") {
      std::string v;
      if (!value(v)) return false;
      args.opts.max_size = std::stoi(v);
    } else if (a == "--json") {
      args.opts.json = 1;
    } else if (a == "--filters") {
      args.verb = "filters";
    } else if (a == "--ideals") {
      args.verb = "ideals";
    } else {
      return false;
    }
  }
  return !args.command.empty();
}

class DocHandle {
 public:
  ~DocHandle() { canext_doc_free(doc_); }
  int load(const std::string& path) {
    int rc = canext_parse_file(path.c_str(), &doc_);
    if (rc != CANEXT_OK) std::cerr << "error: " << canext_last_error() << "\n";
    return rc;
  }
  canext_doc* get() const { return doc_; }

 private:
  canext_doc* doc_ = nullptr;
};

int emitOutput(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return CANEXT_OK;
  }
  std::ofstream out(outPath);
  if (!out) {
    std::cerr << "error: cannot write " << outPath << "\n";
    return CANEXT_ERROR;
  }
  out << text;
  return CANEXT_OK;
}

int finish(int rc, char* report, const Args& args) {
  if (report) {
    emitOutput(report, args.out);
    canext_free_str(report);
  }
  if (rc == CANEXT_ERROR) std::cerr << "error: " << canext_last_error() << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  if (!parseArgs(argc, argv, args)) return usage();

  char* report = nullptr;
  if (args.command == "check") {
    if (args.in.empty()) return usage();
    DocHandle doc;
    if (int rc = doc.load(args.in); rc != CANEXT_OK) return rc;
    return finish(canext_check(doc.get(), &args.opts, &report), report, args);
  }

  if (args.command == "complete") {
    if (args.in.empty() || (args.verb != "filters" && args.verb != "ideals"))
      return usage();
    DocHandle doc;
    if (int rc = doc.load(args.in); rc != CANEXT_OK) return rc;
    char* carrier = nullptr;
    int rc = canext_complete(doc.get(), args.verb.c_str(), &args.opts, &report,
                             args.out.empty() ? nullptr : &carrier);
    if (carrier) {
      // --out receives the carrier document; the report goes to stdout.
      emitOutput(carrier, args.out);
      canext_free_str(carrier);
      if (report) {
        std::cout << report;
        canext_free_str(report);
        report = nullptr;
      }
      if (rc == CANEXT_ERROR) std::cerr << "error: " << canext_last_error() << "\n";
      return rc;
    }
    return finish(rc, report, args);
  }

  if (args.command == "present") {
    if (args.in.empty()) return usage();
    DocHandle doc;
    if (int rc = doc.load(args.in); rc != CANEXT_OK) return rc;
    if (args.verb == "close")
      return finish(canext_present_close(doc.get(), args.set.c_str(), &args.opts, &report),
                    report, args);
    if (args.verb == "enumerate")
      return finish(canext_present_enumerate(doc.get(), &args.opts, &report), report, args);
    if (args.verb == "free")
      return finish(canext_present_free(doc.get(), &args.opts, &report), report, args);
    if (args.verb == "verify-universal") {
      if (args.target.empty()) return usage();
      DocHandle target;
      if (int rc = target.load(args.target); rc != CANEXT_OK) return rc;
      return finish(canext_present_verify_universal(doc.get(), target.get(), &args.opts,
                                                    &report),
                    report, args);
    }
    return usage();
  }

  if (args.command == "canon") {
    if (args.in.empty()) return usage();
    DocHandle doc;
    if (int rc = doc.load(args.in); rc != CANEXT_OK) return rc;
    if (args.verb == "ext") {
      char* carrier = nullptr;
      int rc = canext_canon_ext(doc.get(), &args.opts, &report,
                                args.out.empty() ? nullptr : &carrier);
      if (carrier) {
        emitOutput(carrier, args.out);
        canext_free_str(carrier);
        if (report) {
          std::cout << report;
          canext_free_str(report);
          report = nullptr;
        }
        if (rc == CANEXT_ERROR) std::cerr << "error: " << canext_last_error() << "\n";
        return rc;
      }
      return finish(rc, report, args);
    }
    if (args.verb == "verify")
      return finish(canext_canon_verify(doc.get(), &args.opts, &report), report, args);
    if (args.verb == "check-eq") {
      if (args.ineq.empty()) return usage();
      return finish(canext_canon_check_eq(doc.get(), args.ineq.c_str(), &args.opts,
                                          &report),
                    report, args);
    }
    return usage();
  }

  if (args.command == "corpus" && args.verb == "run")
    return finish(canext_corpus_run(&args.opts, &report), report, args);

  if (args.command == "emit" && args.verb == "dot") {
    if (args.in.empty()) return usage();
    DocHandle doc;
    if (int rc = doc.load(args.in); rc != CANEXT_OK) return rc;
    char* dot = nullptr;
    int rc = canext_emit_dot(doc.get(), &dot);
    if (rc == CANEXT_OK && dot) {
      emitOutput(dot, args.out);
      canext_free_str(dot);
    } else if (rc == CANEXT_ERROR) {
      std::cerr << "error: " << canext_last_error() << "\n";
    }
    return rc;
  }

  return usage();
}
