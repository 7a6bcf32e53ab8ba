#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "rstk/app/figures.hpp"
#include "rstk/app/sweep.hpp"
#include "rstk/app/verify.hpp"
#include "rstk/errors.hpp"

namespace {

using namespace rstk::app;

// --out or stdout
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path.empty())
            return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_)
            throw rstk::ConfigError("cannot open '" + path + "' for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void finish()
    {
        if (file_) {
            file_->close();
            if (!*file_)
                throw rstk::ConfigError("write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

void emit(const Table& t, const std::string& format, const std::string& out)
{
    Sink sink(out);
    if (format == "json")
        write_json(t, sink.stream());
    else
        write_csv(t, sink.stream());
    sink.finish();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rogers-Szego q-special-function toolkit"};
    app.require_subcommand(1);

    std::string only, q_text, out, format = "csv";
    std::optional<double> tol;
    auto* verify = app.add_subcommand("verify", "run the identity checks");
    verify->add_option("--only", only, "check id or eq tag");
    verify->add_option("--q", q_text, "comma-separated q values");
    verify->add_option("--tol", tol, "tolerance for every check");
    verify->add_option("--out", out, "output file");
    verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    int fig_id = 0;
    auto* figure = app.add_subcommand("figure", "write a figure dataset");
    figure->add_option("--id", fig_id, "1-4")->required();
    figure->add_option("--out", out, "output file");

    std::string quantity, mu2_text;
    double theta = 0.0;
    int n_max = 40;
    auto* sweep = app.add_subcommand("sweep", "evaluate a quantity on a (q, mu2) grid");
    sweep->add_option("--quantity", quantity)->required();
    sweep->add_option("--q", q_text)->required();
    sweep->add_option("--mu2", mu2_text, "a:b:steps")->required();
    sweep->add_option("--theta", theta)->required();
    sweep->add_option("--nmax", n_max, "largest n for excitation");
    sweep->add_option("--out", out, "output file");
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            VerifyConfig cfg;
            if (!only.empty())
                cfg.only = only;
            if (!q_text.empty())
                cfg.q_list = parse_q_list(q_text);
            cfg.tol = tol;
            const std::vector<VerifyRecord> records = run_verify(cfg);
            for (const VerifyRecord& r : records)
                if (!r.error.empty())
                    std::cerr << r.id << ": " << r.error << '\n';
            Sink sink(out);
            if (format == "json")
                write_verify_json(records, sink.stream());
            else
                write_csv(verify_table(records), sink.stream());
            sink.finish();
            return all_passed(records) ? 0 : 1;
        }
        if (figure->parsed()) {
            emit(figure_table(fig_id), "csv", out);
            return 0;
        }
        SweepConfig cfg;
        cfg.quantity = quantity;
        cfg.q_list = parse_q_list(q_text);
        cfg.mu2 = parse_mu2_range(mu2_text);
        cfg.theta = theta;
        cfg.n_max = n_max;
        emit(sweep_table(cfg), format, out);
        return 0;
    } catch (const rstk::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
