#include "medread/demo_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>

#include "medread/analyzers.hpp"
#include "medread/io.hpp"

namespace medread {

namespace {

// ---------------------------------------------------------------------
// Deterministic draws. mt19937_64 is fully specified by the standard;
// all mappings below are explicit, so the corpus is byte-stable across
// platforms.

double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
}

double normal(std::mt19937_64& eng, double mu, double sigma) {
  double u1 = uniform01(eng);
  double u2 = uniform01(eng);
  if (u1 <= 0) {
    u1 = 1e-12;
  }
  double z = std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * 3.14159265358979323846 * u2);
  return mu + sigma * z;
}

std::size_t pick(std::mt19937_64& eng, std::size_t n) {
  return static_cast<std::size_t>(eng() % n);
}

int poisson(std::mt19937_64& eng, double lambda) {
  if (lambda <= 0) {
    return 0;
  }
  double limit = std::exp(-lambda);
  double p = 1.0;
  int k = 0;
  do {
    ++k;
    p *= uniform01(eng);
  } while (p > limit && k < 50);
  return k - 1;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------
// Vocabulary pools.

const char* kFunctionWords[] = {
    "the",   "of",    "and",  "a",     "to",    "in",   "is",    "was",
    "it",    "for",   "on",   "are",   "as",    "with", "at",    "by",
    "an",    "be",    "this", "that",  "from",  "or",   "had",   "not",
    "were",  "but",   "have", "has",   "they",  "which", "when", "their",
    "can",   "been",  "than", "who",   "its",   "also", "may",   "into",
    "more",  "other", "some", "these", "could", "about", "after", "each",
};

const char* kEasyWords[] = {
    "people", "study",  "found",  "care",   "health", "help",   "show",
    "used",   "test",   "blood",  "heart",  "body",   "drug",   "pain",
    "risk",   "doctor", "early",  "often",  "water",  "sleep",  "food",
    "child",  "group",  "need",   "well",   "most",   "small",  "large",
    "common", "cause",  "change", "result", "better", "worse",  "week",
    "month",  "year",   "day",    "time",   "home",   "work",   "life",
    "way",    "part",   "side",   "case",   "rate",   "dose",   "cost",
    "trial",  "staff",  "nurse",  "team",   "plan",   "level",  "high",
    "low",    "new",    "old",    "long",   "short",  "first",  "last",
    "next",   "best",   "less",   "many",   "few",    "both",   "same",
    "still",  "skin",   "bone",   "lung",   "liver",  "cell",   "gene",
    "virus",  "fever",  "cough",  "wound",  "nose",   "mouth",  "brain",
    "nerve",  "muscle", "joint",  "spine",  "chest",  "cancer", "tumor",
    "shot",   "dress",  "clean",  "fresh",  "clear",  "safe",   "mild",
    "severe", "weak",   "strong", "older",  "younger", "given", "taken",
    "seen",   "known",  "asked",  "told",   "kept",   "made",   "lost",
    "thought", "through", "straight", "strength", "brought", "children",
};

// Two heuristic syllables each; the hard pool is the only plain source
// of polysyllabic words.
const char* kMediumWords[] = {
    "treatment", "research", "patients", "patient",  "chronic",
    "relapse",   "screening", "follow",  "during",   "against",
    "between",   "without",  "within",   "later",    "control",
    "controls",  "findings", "finding",  "support",  "treated",
    "review",    "process",  "program",  "outcome",  "measure",
    "decrease",  "increase", "symptom",  "syndrome", "special",
    "earlier",   "disease",  "because",  "effects",  "response",
    "access",    "impact",   "order",    "record",   "records",
    "spinal",    "fatal",    "vital",    "local",    "global",
    "complex",   "simple",   "sample",   "single",   "double",
    "trouble",   "stable",   "details",  "detail",   "address",
    "relief",    "belief",   "causes",   "laser",    "nurses",
    "clinics",   "clinic",   "cancers",  "tumors",   "doses",
    "robust",    "costly",   "chances",  "higher",   "lower",
    "upper",     "under",    "over",     "before",   "weekly",
    "monthly",   "yearly",   "partly",   "hardly",   "mostly",
    "deeply",    "strongly", "slowly",   "quickly",  "nearly",
    "started",   "ended",    "taking",   "making",   "working",
    "feeling",   "painful",  "harmful",  "helpful",  "doctors",
};

const char* kHardWords[] = {
    "ameliorate",       "heterogeneous",    "comorbidity",
    "pathophysiology",  "biomarker",        "methodology",
    "intervention",     "randomized",       "significantly",
    "administration",   "concentration",    "susceptibility",
    "proliferation",    "differentiation",  "characterization",
    "immunological",    "epidemiology",     "cardiovascular",
    "gastrointestinal", "pharmacological",  "physiological",
    "neurological",     "psychological",    "statistical",
    "systematically",   "bioavailability",  "contraindication",
    "histological",     "morphological",    "pharmacokinetics",
    "pathogenesis",     "etiology",         "prognosis",
    "prophylaxis",      "hypertension",     "hyperglycemia",
    "inflammation",     "inflammatory",     "autoimmune",
    "congenital",       "degenerative",     "idiopathic",
    "iatrogenic",       "nosocomial",       "palliative",
    "perioperative",    "postoperative",    "preoperative",
    "subcutaneous",     "intravenous",      "intramuscular",
    "longitudinal",     "multivariate",     "univariate",
    "retrospective",    "prospective",      "observational",
    "meta-analysis",    "heterogeneity",    "generalizability",
    "reproducibility",  "standardization",  "quantification",
    "stratification",   "categorization",   "interpretation",
    "implementation",   "recommendation",   "rehabilitation",
    "hospitalization",  "immunization",     "vaccination",
    "colonization",     "transmission",     "surveillance",
    "microbiology",     "biotechnology",    "nanotechnology",
    "bioinformatics",   "genomics",         "proteomics",
    "metabolomics",     "transcriptome",    "epigenome",
    "idea",             "area",             "anemia",
    "edema",            "uremia",           "anxiety",
};

// Jargon morphology.
const char* kMedRootsA[] = {
    "cardio", "neuro",  "hepato",  "nephro", "osteo",  "myelo",  "angio",
    "gastro", "dermato", "hemato", "broncho", "thrombo", "glyco", "cyto",
    "immuno", "necro",  "athero",  "fibro",  "lipo",   "arthro",
};
const char* kMedRootsB[] = {
    "myopathy", "pathy",    "itis",   "osis",      "emia",   "ectomy",
    "plasty",   "genesis",  "trophy", "lysis",     "oma",    "sclerosis",
    "plasia",   "toxicity",
};

const char* kOrganismFirst[] = {
    "Tiotropium",    "Plasmodium",  "Schistosoma",  "Mycobacterium",
    "Staphylococcus", "Klebsiella", "Aspergillus",  "Toxoplasma",
    "Leishmania",    "Borrelia",
};
const char* kOrganismSecond[] = {
    "bromidium",  "mansoni",    "epidermidis", "pneumoniae",
    "falciparum", "infestans",  "intercalatum", "japonicum",
};

const char* kHardAdjectives[] = {
    "distributive",  "processive",   "recombinant",  "allosteric",
    "epigenetic",    "mitochondrial", "ribosomal",   "cytosolic",
    "phosphorylated", "glycosylated", "monoclonal",  "oncogenic",
    "stochastic",    "canonical",
};
const char* kHardNounPairs[] = {
    "binding mechanism",     "nuclease activity",    "signaling cascade",
    "transcription factor",  "methylation signature", "expression profile",
    "regulatory kinase",     "degradation pathway",  "replication machinery",
    "chromatin remodeling",
};

const char* kBrandNames[] = {
    "BioNTech",  "Veltrix",  "Zanthera", "Corvela",  "Medronix",
    "Synthavia", "Axiogen",  "Belcara",  "Novastra", "Quillent",
    "Tremada",   "Oravance", "Lumikast", "Denravi",  "Xelpharx",
    "Cintrova",  "Marelian", "Vostrelle", "Ganthex", "Pirolen",
    "Serovax",   "Taldrine", "Ubrevia",  "Welphora", "Yantrix",
};

const char* kGeneralComplex[] = {
    "obfuscate",   "recalcitrant", "perfunctory", "quiescent",
    "salient",     "tenuous",      "ubiquitous",  "vestigial",
    "anomalous",   "conflate",     "egregious",   "empirical",
    "esoteric",    "exacerbate",   "facetious",   "gratuitous",
    "hegemony",    "iconoclast",   "juxtapose",   "lassitude",
    "mellifluous", "nefarious",    "obstinate",   "paradigm",
    "quixotic",    "rhetoric",     "sanguine",    "truncate",
    "unilateral",  "verbose",      "wistful",     "zealot",
    "abrogate",    "bellicose",    "capricious",  "deleterious",
    "ebullient",   "fastidious",   "garrulous",   "harbinger",
    "impecunious", "inchoate",     "intransigent", "laconic",
    "munificent",  "obdurate",     "pellucid",    "querulous",
    "redolent",    "sagacious",    "taciturn",    "untenable",
};

const char* kMultiSense[] = {
    "vector", "culture", "expression", "host", "marker", "medium",
    "resistance", "plastic",
};

const char* kMedicalAbbrev[] = {
    "LTFU", "CABG", "COPD", "MRSA", "EGFR", "TNFA", "CRP",  "ICU",
    "CKD",  "ARDS", "PCI",  "TAVR", "DVT",  "VTE",  "AFIB", "CHF",
    "ESRD", "GERD", "IBD",  "IBS",  "TIA",  "CVA",  "UTI",  "URI",
    "RSV",  "HPV",  "HBV",  "HCV",  "COX",  "ACE",  "ARB",  "SSRI",
    "NSAID", "PPI", "GFR",  "ALT",  "AST",  "INR",  "PTT",  "WBC",
    "RBC",  "HGB",  "PLT",  "BUN",  "LDL",  "HDL",  "TSH",  "PSA",
    "EKG",  "EEG",  "CSF",  "BAL",  "PFT",  "ABG",  "NICU",
};

const char* kGeneralAbbrev[] = {
    "CI", "RCT", "SD", "IQR", "BMI", "FAQ", "USA", "NHS", "WHO", "FDA",
    "PDF", "GDP", "DIY", "ASAP",
};

// ---------------------------------------------------------------------
// Per-source shape of the corpus.

struct SourceSpec {
  const char* id;
  int n_complex;
  int n_simple;
  double mu_complex;  // CEFR-scale difficulty
  double mu_simple;
  double jargon_boost;
};

const SourceSpec kSources[] = {
    {"cochrane", 250, 170, 4.25, 3.35, 1.00},
    {"pnas", 160, 110, 4.95, 4.05, 1.25},
    {"elife", 160, 280, 5.00, 3.90, 1.30},
    {"wiki", 200, 220, 3.80, 2.95, 0.85},
    {"msd", 180, 200, 3.65, 2.75, 0.90},
    {"nihr-public-health-research", 165, 105, 4.35, 3.25, 1.00},
    {"nihr-health-technology-assessment", 170, 110, 4.45, 3.35, 1.05},
    {"nihr-efficacy-and-mechanism-evaluation", 155, 95, 4.50, 3.40, 1.05},
    {"nihr-programme-grants-for-applied-research", 160, 100, 4.30, 3.30, 0.95},
    {"nihr-health-services-and-delivery-research", 160, 100, 4.25, 3.20, 0.95},
    {"plos-biology", 125, 115, 4.85, 4.00, 1.20},
    {"plos-genetics", 135, 115, 4.90, 4.10, 1.25},
    {"plos-pathogens", 140, 125, 5.05, 4.35, 1.30},
    {"plos-computational-biology", 130, 115, 4.80, 4.00, 1.20},
    {"plos-neglected-tropical-diseases", 140, 130, 4.75, 3.95, 1.15},
};

// Generation constants; tuned against the published summary statistics.
struct Tuning {
  double sigma_d = 0.55;       // within-cell difficulty spread
  double rho_len = 0.85;       // length's share of the rated difficulty
  double rho_mix = 0.80;       // word-mix share of the rated difficulty
  double text_gap = 0.50;      // side gap carried by surface features
  double len_base = 17.0;      // words at difficulty 2.5
  double len_slope = 4.0;
  double len_sigma = 3.0;
  double med_base = 0.18;      // jargon intensities vs (d - 2.5)
  double med_slope = 0.55;
  double gen_base = 0.12;
  double gen_slope = 0.06;
  double ms_rate = 0.012;
  double abb_base = 0.20;
  double abb_slope = 0.10;
  double hard_mix_base = 0.05;  // share of hard content words
  double hard_mix_slope = 0.05;
  double hard_mix_sigma = 0.05;
  double char_bias_rate = 0.7;  // word-length preference noise (hits ARI)
  double rating_jargon = 0.20;  // rating bump per unexpected jargon span
  double rating_sigma = 0.30;
  double annotator_sigma = 0.22;
};

struct JargonSurface {
  std::vector<std::string> tokens;
  SpanCategory category;
};

struct Pools {
  std::vector<JargonSurface> medical;  // google-easy/hard, name entities
  std::vector<JargonSurface> general;
  std::vector<JargonSurface> multisense;
  std::vector<JargonSurface> abbrev;
};

std::vector<std::string> split_words(const std::string& phrase) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < phrase.size()) {
    std::size_t space = phrase.find(' ', pos);
    if (space == std::string::npos) {
      out.push_back(phrase.substr(pos));
      break;
    }
    out.push_back(phrase.substr(pos, space - pos));
    pos = space + 1;
  }
  return out;
}

Pools build_pools() {
  Pools pools;
  for (const char* a : kMedRootsA) {
    for (const char* b : kMedRootsB) {
      pools.medical.push_back(
          {{std::string(a) + b}, SpanCategory::GoogleEasy});
    }
  }
  for (const char* first : kOrganismFirst) {
    for (const char* second : kOrganismSecond) {
      pools.medical.push_back(
          {{first, second}, SpanCategory::GoogleEasy});
    }
  }
  for (const char* adj : kHardAdjectives) {
    for (const char* nouns : kHardNounPairs) {
      std::vector<std::string> tokens = {adj};
      for (std::string& t : split_words(nouns)) {
        tokens.push_back(std::move(t));
      }
      pools.medical.push_back({tokens, SpanCategory::GoogleHard});
    }
  }
  for (const char* brand : kBrandNames) {
    pools.medical.push_back({{brand}, SpanCategory::MedicalNameEntity});
  }
  for (const char* word : kGeneralComplex) {
    pools.general.push_back({{word}, SpanCategory::GeneralComplex});
  }
  for (const char* word : kMultiSense) {
    pools.multisense.push_back({{word}, SpanCategory::MultiSense});
  }
  for (const char* word : kMedicalAbbrev) {
    pools.abbrev.push_back({{word}, SpanCategory::MedicalAbbreviation});
  }
  for (const char* word : kGeneralAbbrev) {
    pools.abbrev.push_back({{word}, SpanCategory::GeneralAbbreviation});
  }
  return pools;
}

const JargonSurface& pick_medical(std::mt19937_64& eng, const Pools& pools,
                                  double d) {
  // Harder sentences draw google-hard more often.
  double p_hard = std::clamp(0.05 + 0.05 * (d - 2.5), 0.01, 0.35);
  double u = uniform01(eng);
  SpanCategory want;
  if (u < p_hard) {
    want = SpanCategory::GoogleHard;
  } else if (u < p_hard + 0.06) {
    want = SpanCategory::MedicalNameEntity;
  } else {
    want = SpanCategory::GoogleEasy;
  }
  for (int tries = 0; tries < 64; ++tries) {
    const JargonSurface& s = pools.medical[pick(eng, pools.medical.size())];
    if (s.category == want) {
      return s;
    }
  }
  return pools.medical[pick(eng, pools.medical.size())];
}

struct SentenceDraft {
  AnnotatedSentence sentence;
  double difficulty = 0;
  double jargon_excess = 0;  // spans beyond the difficulty expectation
};

SentenceDraft generate_sentence(std::mt19937_64& eng, const Tuning& tuning,
                                const SourceSpec& spec, Side side,
                                const Pools& pools, int index) {
  SentenceDraft draft;
  double mu = side == Side::Complex ? spec.mu_complex : spec.mu_simple;
  // Rated difficulty, sentence length and lexical mix share one latent
  // only partially: long sentences are not always hard ones.
  double z_shared = normal(eng, 0, 1);
  double z_len = normal(eng, 0, 1);
  double z_mix = normal(eng, 0, 1);
  // Surface features carry only part of the complex/simple gap; ratings
  // and jargon carry all of it.
  double mid = (spec.mu_complex + spec.mu_simple) / 2.0;
  double mu_text = mid + tuning.text_gap * (mu - mid);
  auto blend = [&](double rho, double z_own) {
    return mu_text + tuning.sigma_d *
                         (rho * z_shared + std::sqrt(1.0 - rho * rho) * z_own);
  };
  double d = std::clamp(mu + tuning.sigma_d * z_shared, 0.8, 6.4);
  double d_len = std::clamp(blend(tuning.rho_len, z_len), 0.8, 6.4);
  double d_mix = std::clamp(blend(tuning.rho_mix, z_mix), 0.8, 6.4);
  draft.difficulty = d;

  double lambda_med = std::max(
      0.02, (tuning.med_base + tuning.med_slope * (d - 2.5)) * spec.jargon_boost);
  double lambda_gen =
      std::max(0.01, tuning.gen_base + tuning.gen_slope * (d - 2.5));
  double lambda_abb =
      std::max(0.01, tuning.abb_base + tuning.abb_slope * (d - 2.5));
  int n_med = poisson(eng, lambda_med);
  int n_gen = poisson(eng, lambda_gen);
  int n_ms = poisson(eng, tuning.ms_rate);
  int n_abb = poisson(eng, lambda_abb);
  double expected = lambda_med + lambda_gen + tuning.ms_rate + lambda_abb;

  std::vector<const JargonSurface*> picked;
  for (int i = 0; i < n_med; ++i) {
    picked.push_back(&pick_medical(eng, pools, d));
  }
  for (int i = 0; i < n_gen; ++i) {
    picked.push_back(&pools.general[pick(eng, pools.general.size())]);
  }
  for (int i = 0; i < n_ms; ++i) {
    picked.push_back(&pools.multisense[pick(eng, pools.multisense.size())]);
  }
  for (int i = 0; i < n_abb; ++i) {
    picked.push_back(&pools.abbrev[pick(eng, pools.abbrev.size())]);
  }

  int words =
      static_cast<int>(std::lround(tuning.len_base +
                                   tuning.len_slope * (d_len - 2.5) +
                                   normal(eng, 0, tuning.len_sigma)));
  words = std::clamp(words, 6, 58);

  // Keep at least four plain words; drop surplus spans.
  std::size_t jargon_tokens = 0;
  std::vector<const JargonSurface*> kept;
  for (const JargonSurface* s : picked) {
    if (jargon_tokens + s->tokens.size() + 4 >
        static_cast<std::size_t>(words)) {
      continue;
    }
    jargon_tokens += s->tokens.size();
    kept.push_back(s);
  }
  draft.jargon_excess = static_cast<double>(kept.size()) - expected;

  int plain = words - static_cast<int>(jargon_tokens);

  double hard_mix = std::clamp(
      tuning.hard_mix_base + tuning.hard_mix_slope * (d_mix - 2.5) +
          normal(eng, 0, tuning.hard_mix_sigma),
      0.02, 0.75);
  double easy_mix = std::clamp(0.62 - 0.13 * (d_mix - 2.5), 0.05, 0.9);
  // Independent of difficulty: some sentences prefer longer (or shorter)
  // surface forms within the same vocabulary band.
  double char_bias = normal(eng, 0, 1);

  // Units: each jargon surface stays atomic; plain words are singleton
  // units. Shuffling units places spans at random positions.
  struct Unit {
    std::vector<std::string> tokens;
    const JargonSurface* span = nullptr;
  };
  std::vector<Unit> units;
  for (const JargonSurface* s : kept) {
    units.push_back({s->tokens, s});
  }
  constexpr std::size_t kNumFunction = std::size(kFunctionWords);
  constexpr std::size_t kNumEasy = std::size(kEasyWords);
  constexpr std::size_t kNumMedium = std::size(kMediumWords);
  constexpr std::size_t kNumHard = std::size(kHardWords);
  auto biased_pick = [&](const char* const* pool, std::size_t n) {
    const char* best = pool[pick(eng, n)];
    if (uniform01(eng) >= tuning.char_bias_rate) {
      return best;
    }
    bool prefer_long = char_bias > 0;
    for (int extra = 0; extra < 2; ++extra) {
      const char* candidate = pool[pick(eng, n)];
      bool longer = std::strlen(candidate) > std::strlen(best);
      if (longer == prefer_long) {
        best = candidate;
      }
    }
    return best;
  };
  for (int i = 0; i < plain; ++i) {
    double u = uniform01(eng);
    const char* word;
    if (u < 0.34) {
      word = kFunctionWords[pick(eng, kNumFunction)];
    } else {
      double v = uniform01(eng);
      if (v < hard_mix) {
        word = biased_pick(kHardWords, kNumHard);
      } else if (v < hard_mix + easy_mix) {
        word = biased_pick(kEasyWords, kNumEasy);
      } else {
        word = biased_pick(kMediumWords, kNumMedium);
      }
    }
    units.push_back({{word}, nullptr});
  }
  // Fisher-Yates with explicit index mapping.
  for (std::size_t i = units.size(); i > 1; --i) {
    std::size_t j = pick(eng, i);
    std::swap(units[i - 1], units[j]);
  }

  AnnotatedSentence& s = draft.sentence;
  char id[96];
  std::snprintf(id, sizeof(id), "%s-%c-%04d", spec.id,
                side == Side::Complex ? 'c' : 's', index);
  s.id = id;
  s.source = spec.id;
  s.side = side;
  for (const Unit& unit : units) {
    if (unit.span != nullptr) {
      std::size_t start = s.tokens.size();
      for (const std::string& t : unit.tokens) {
        s.tokens.push_back(t);
      }
      s.spans.push_back({start, s.tokens.size(), unit.span->category});
    } else {
      s.tokens.push_back(unit.tokens.front());
      if (s.tokens.size() > 3 && uniform01(eng) < 0.06) {
        s.tokens.push_back(",");
      }
    }
  }
  s.tokens.push_back(".");
  std::sort(s.spans.begin(), s.spans.end(),
            [](const ComplexSpan& a, const ComplexSpan& b) {
              return a.start < b.start;
            });
  return draft;
}

// CEFR level with +/- modifiers: integer 1..6 plus {-0.3, 0, +0.3}.
double quantize_rating(double value) {
  double v = std::clamp(value, 0.85, 6.15);
  int level = static_cast<int>(std::lround(v));
  level = std::clamp(level, 1, 6);
  double frac = v - static_cast<double>(level);
  double modifier = 0.0;
  if (frac > 0.15) {
    modifier = 0.3;
  } else if (frac < -0.15) {
    modifier = -0.3;
  }
  return static_cast<double>(level) + modifier;
}

enum class WordClass { Function, Easy, Medium, Hard, Jargon, Abbrev };

void assign_resources(DemoCorpus& demo, std::uint64_t seed,
                      const Pools& pools) {
  std::map<std::string, WordClass> vocab;
  for (const char* w : kFunctionWords) vocab.emplace(w, WordClass::Function);
  for (const char* w : kEasyWords) vocab.emplace(w, WordClass::Easy);
  for (const char* w : kMediumWords) vocab.emplace(w, WordClass::Medium);
  for (const char* w : kHardWords) vocab.emplace(w, WordClass::Hard);
  auto add_pool = [&](const std::vector<JargonSurface>& pool, WordClass cls) {
    for (const JargonSurface& s : pool) {
      for (const std::string& t : s.tokens) {
        vocab.emplace(fold_case(t), cls);
      }
    }
  };
  add_pool(pools.medical, WordClass::Jargon);
  add_pool(pools.general, WordClass::Jargon);
  add_pool(pools.multisense, WordClass::Medium);  // common words reused
  add_pool(pools.abbrev, WordClass::Abbrev);

  for (const auto& [word, cls] : vocab) {
    std::mt19937_64 eng(seed ^ fnv1a(word));
    eng.discard(3);
    double u = uniform01(eng);
    std::uint64_t count = 0;
    double aoa = 0;
    bool in_freq = true;
    bool in_aoa = true;
    switch (cls) {
      case WordClass::Function:
        count = 30000 + static_cast<std::uint64_t>(u * 60000);
        aoa = 3.0 + 3.0 * uniform01(eng);
        break;
      case WordClass::Easy:
        count = 4000 + static_cast<std::uint64_t>(u * 11000);
        aoa = 4.0 + 4.0 * uniform01(eng);
        break;
      case WordClass::Medium:
        count = 600 + static_cast<std::uint64_t>(u * 3400);
        aoa = 7.0 + 4.0 * uniform01(eng);
        break;
      case WordClass::Hard:
        count = 60 + static_cast<std::uint64_t>(u * 440);
        aoa = 10.0 + 6.0 * uniform01(eng);
        break;
      case WordClass::Jargon:
        in_freq = uniform01(eng) > 0.35;
        count = 2 + static_cast<std::uint64_t>(u * 48);
        in_aoa = uniform01(eng) > 0.30;
        aoa = 13.0 + 6.0 * uniform01(eng);
        break;
      case WordClass::Abbrev:
        count = 100 + static_cast<std::uint64_t>(u * 1400);
        in_aoa = false;
        aoa = 0;
        break;
    }
    if (in_freq) {
      demo.wordfreq[word] = count;
      demo.zipf[word] =
          std::log10(static_cast<double>(count) + 1.0) + 1.0 +
          0.3 * (uniform01(eng) - 0.5);
    }
    if (in_aoa) {
      demo.aoa[word] = aoa;
    }
    if (cls == WordClass::Function || cls == WordClass::Easy ||
        (cls == WordClass::Medium && count >= 1500)) {
      demo.common2000.push_back(word);
    }
  }
  std::sort(demo.common2000.begin(), demo.common2000.end());
  demo.common_words = {"a",  "i",  "an", "or", "is", "it", "at", "on",
                       "in", "we", "to", "of", "no", "am", "pm", "vs",
                       "etc", "ie", "eg"};
  std::sort(demo.common_words.begin(), demo.common_words.end());
}

}  // namespace

DemoCorpus make_demo_corpus(std::uint64_t seed) {
  const Tuning tuning;
  DemoCorpus demo;
  Pools pools = build_pools();
  std::mt19937_64 eng(seed);

  std::vector<SentenceDraft> drafts;
  for (const SourceSpec& spec : kSources) {
    for (int i = 0; i < spec.n_complex; ++i) {
      drafts.push_back(
          generate_sentence(eng, tuning, spec, Side::Complex, pools, i));
    }
    for (int i = 0; i < spec.n_simple; ++i) {
      drafts.push_back(
          generate_sentence(eng, tuning, spec, Side::Simple, pools, i));
    }
  }

  // Random split assignment at the published sizes.
  std::vector<std::size_t> order(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = pick(eng, i);
    std::swap(order[i - 1], order[j]);
  }
  constexpr std::size_t kTrain = 2587;
  constexpr std::size_t kDev = 784;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    Split split = rank < kTrain            ? Split::Train
                  : rank < kTrain + kDev   ? Split::Dev
                                           : Split::Test;
    drafts[order[rank]].sentence.split = split;
  }

  // Ratings: single annotator on train, two (averaged) on dev/test.
  for (SentenceDraft& draft : drafts) {
    double base = draft.difficulty +
                  tuning.rating_jargon * draft.jargon_excess +
                  normal(eng, 0, tuning.rating_sigma);
    int annotators = draft.sentence.split == Split::Train ? 1 : 2;
    double sum = 0;
    for (int a = 0; a < annotators; ++a) {
      sum += quantize_rating(base + normal(eng, 0, tuning.annotator_sigma));
    }
    draft.sentence.rating = sum / static_cast<double>(annotators);
    demo.corpus.push_back(std::move(draft.sentence));
  }

  assign_resources(demo, seed, pools);
  return demo;
}

void write_demo_resources(const DemoCorpus& demo,
                          const std::filesystem::path& dir) {
  std::string freq;
  for (const auto& [word, count] : demo.wordfreq) {
    freq += word;
    freq += '\t';
    freq += std::to_string(count);
    freq += '\n';
  }
  write_file_atomic(dir / "wordfreq.tsv", freq);

  auto write_values = [&](const std::map<std::string, double>& table,
                          const char* name) {
    std::string out;
    char buf[64];
    for (const auto& [word, value] : table) {
      std::snprintf(buf, sizeof(buf), "%.3f", value);
      out += word;
      out += '\t';
      out += buf;
      out += '\n';
    }
    write_file_atomic(dir / name, out);
  };
  write_values(demo.aoa, "aoa.tsv");
  write_values(demo.zipf, "zipf.tsv");

  auto write_list = [&](const std::vector<std::string>& words,
                        const char* name) {
    std::string out;
    for (const std::string& w : words) {
      out += w;
      out += '\n';
    }
    write_file_atomic(dir / name, out);
  };
  write_list(demo.common2000, "common2000.txt");
  write_list(demo.common_words, "common_words.txt");
}

}  // namespace medread
