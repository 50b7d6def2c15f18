#include "wcert/catalog.hpp"

#include <algorithm>

#include "wcert/special.hpp"

namespace wcert {

namespace {

std::string gamma_slice_text(double a) {
  std::string lit = format_double(a);
  return "gamma(" + lit + "*x)/gamma(" + lit + ")";
}

CatalogCase make_case(std::string label, std::string text, DomainSpec domain,
                      std::vector<ExpectedProperty> expected) {
  CatalogCase c;
  c.label = std::move(label);
  c.expression_text = std::move(text);
  c.domain = domain;
  c.expected = std::move(expected);
  return c;
}

const char* expectation_label(Expectation e) {
  switch (e) {
    case Expectation::Certified: return "certified";
    case Expectation::CertifiedStrict: return "certified (strict)";
    case Expectation::Refuted: return "refuted";
    case Expectation::RecordOnly: return "recorded";
  }
  return "?";
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog() {
  const Constants& k = constants();
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.id = "identity";
    e.provenance = "identity baseline: x satisfies both inequalities on both intervals";
    e.cases.push_back(make_case("unit", "x", DomainSpec::unit(),
                                {{Property::LWeierstrass, Expectation::Certified},
                                 {Property::Submultiplicative, Expectation::Certified},
                                 {Property::Weierstrass, Expectation::Certified}}));
    e.cases.push_back(make_case("ray", "x", DomainSpec::ray(),
                                {{Property::LWeierstrass, Expectation::Certified},
                                 {Property::Submultiplicative, Expectation::Certified},
                                 {Property::Weierstrass, Expectation::Certified}}));
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "arctan";
    e.provenance = "normalized arctangent (4/pi) arctan x on the unit interval";
    e.cases.push_back(make_case("unit", "(4/pi)*arctan(x)", DomainSpec::unit(),
                                {{Property::LWeierstrass, Expectation::Certified},
                                 {Property::Submultiplicative, Expectation::Certified},
                                 {Property::Weierstrass, Expectation::Certified}}));
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "sin-printed";
    e.provenance = "printed sine example; sin(pi/4) != 1 so the normalization gate must fail";
    CatalogCase c = make_case("unit", "sin((pi/4)*x)", DomainSpec::unit(), {});
    c.expect_normalization_failure = true;
    e.cases.push_back(std::move(c));
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "cos";
    e.provenance = "cosine ratio cos x / cos 1: submultiplicative yet the left inequality fails";
    e.cases.push_back(make_case("unit", "cos(x)/cos(1)", DomainSpec::unit(),
                                {{Property::Submultiplicative, Expectation::Certified},
                                 {Property::LWeierstrass, Expectation::Refuted}}));
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "log2";
    e.provenance = "binary logarithm of 1+x; certified on both intervals, strict on the left";
    for (const char* which : {"unit", "ray"}) {
      DomainSpec d = which == std::string("unit") ? DomainSpec::unit() : DomainSpec::ray();
      e.cases.push_back(make_case(which, "log2(1+x)", d,
                                  {{Property::LWeierstrass, Expectation::CertifiedStrict},
                                   {Property::Submultiplicative, Expectation::Certified},
                                   {Property::Weierstrass, Expectation::CertifiedStrict}}));
    }
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "gamma-a";
    e.provenance = "normalized gamma slices gamma(ax)/gamma(a); left inequality certified up to "
                   "a = x1, fully certified up to a = xi";
    struct Row {
      double a;
      bool submult;
    };
    const Row rows[] = {{0.1, true}, {k.xi, true}, {0.3, false}, {k.x1, false}};
    for (const Row& row : rows) {
      std::vector<ExpectedProperty> expected{{Property::LWeierstrass, Expectation::Certified}};
      if (row.submult) {
        expected.push_back({Property::Submultiplicative, Expectation::Certified});
        expected.push_back({Property::Weierstrass, Expectation::Certified});
      }
      e.cases.push_back(make_case("a=" + format_double(row.a), gamma_slice_text(row.a),
                                  DomainSpec::unit(), std::move(expected)));
    }
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.id = "gamma-a-beyond";
    e.provenance = "gamma slice with a = 0.6, past the certified parameter range; outcome is "
                   "recorded, not asserted";
    e.cases.push_back(make_case("a=0.6", gamma_slice_text(0.6), DomainSpec::unit(),
                                {{Property::LWeierstrass, Expectation::RecordOnly}}));
    out.push_back(std::move(e));
  }

  return out;
}

std::vector<EntryOutcome> run_catalog(const std::vector<std::string>& filter,
                                      const ClassifyConfig& cfg) {
  std::vector<EntryOutcome> out;
  for (CatalogEntry& entry : builtin_catalog()) {
    if (!filter.empty() &&
        std::find(filter.begin(), filter.end(), entry.id) == filter.end())
      continue;
    EntryOutcome eo;
    eo.id = entry.id;
    eo.provenance = entry.provenance;
    eo.match = true;
    for (CatalogCase& c : entry.cases) {
      CaseOutcome co;
      co.spec = c;
      co.result = classify(Expression::parse(c.expression_text), c.domain, cfg);
      co.match = true;

      if (c.expect_normalization_failure) {
        if (co.result.normalization.ok()) {
          co.match = false;
          co.mismatches.push_back("expected the normalization gate to fail, but it passed");
        }
      } else if (!co.result.normalization.ok()) {
        co.match = false;
        co.mismatches.push_back("normalization gate failed unexpectedly (f(1) = " +
                                format_double(co.result.normalization.f1) + ")");
      } else {
        for (const ExpectedProperty& exp : c.expected) {
          const PropertyVerdict* v = co.result.find(exp.property);
          bool ok = false;
          switch (exp.expect) {
            case Expectation::Certified:
              ok = v && v->outcome == Outcome::Certified;
              break;
            case Expectation::CertifiedStrict:
              ok = v && v->outcome == Outcome::Certified && v->certificate &&
                   v->certificate->strict;
              break;
            case Expectation::Refuted:
              ok = v && v->outcome == Outcome::Refuted;
              break;
            case Expectation::RecordOnly:
              ok = true;
              break;
          }
          if (!ok) {
            co.match = false;
            co.mismatches.push_back(
                std::string(property_name(exp.property)) + ": expected " +
                expectation_label(exp.expect) + ", got " +
                (v ? outcome_name(v->outcome) : "no verdict"));
          }
        }
      }
      eo.match = eo.match && co.match;
      eo.cases.push_back(std::move(co));
    }
    out.push_back(std::move(eo));
  }
  return out;
}

long count_mismatches(const std::vector<EntryOutcome>& outcomes) {
  long n = 0;
  for (const auto& e : outcomes)
    if (!e.match) ++n;
  return n;
}

}  // namespace wcert
