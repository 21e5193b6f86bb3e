#!/usr/bin/env python3
"""Generates the bundled data files.

Outputs (into data/ by default):
  lexicon.txt           frequency lexicon: word<TAB>count
  irregular_forms.txt   lemmatizer table: form<TAB>lemma<TAB>POS
  treebank.txt          tagger training data: word_TAG tokens, one sentence per line
  thailand_reviews.csv  118-review hotel/travel corpus fixture (id,text)

Everything is derived from one seed, so the files are reproducible. The
script also audits its own output: every corpus word must be in the lexicon,
every inflected form must lemmatize back to its intended lemma under the
C++ rules (mirrored here), every content word must reach the tagger's
dictionary threshold, and the lexicon must keep "delicious" as the unique
best correction for the "delicousr" typo.
"""

import argparse
import collections
import csv
import pathlib
import random
import sys

SEED = 20250817
REVIEWS = 118

# ---------------------------------------------------------------------------
# Vocabulary
# ---------------------------------------------------------------------------

THEMES = {
    "food": {
        "nouns": ["food", "curry", "soup", "noodle", "rice", "seafood", "mango",
                  "dessert", "breakfast", "flavor", "portion", "menu"],
        "adjs": ["delicious", "tasty", "spicy", "fresh", "sweet", "fragrant",
                 "hearty", "crispy", "zesty", "savory"],
    },
    "beach": {
        "nouns": ["beach", "sand", "wave", "sunset", "coast", "shore", "palm",
                  "lagoon", "bay", "cove", "resort"],
        "adjs": ["beautiful", "calm", "clear", "warm", "scenic", "golden",
                 "pristine", "turquoise", "dreamy", "unspoiled"],
    },
    "hotel": {
        "nouns": ["hotel", "room", "bed", "pool", "lobby", "balcony", "suite",
                  "bathroom", "shower", "view"],
        "adjs": ["clean", "comfortable", "spacious", "modern", "quiet", "cozy",
                 "elegant", "tidy", "luxurious", "airy"],
    },
    "staff": {
        "nouns": ["staff", "manager", "waiter", "receptionist", "guide", "driver",
                  "host", "porter", "chef", "housekeeper"],
        "adjs": ["friendly", "helpful", "polite", "attentive", "professional",
                 "kind", "welcoming", "patient", "cheerful", "courteous"],
    },
    "temple": {
        "nouns": ["temple", "shrine", "statue", "monk", "pagoda", "carving",
                  "altar", "courtyard", "mural", "spire"],
        "adjs": ["ancient", "sacred", "ornate", "impressive", "serene",
                 "majestic", "historic", "intricate", "solemn", "timeless"],
    },
    "nightlife": {
        "nouns": ["bar", "club", "cocktail", "music", "band", "party", "show",
                  "crowd", "stage", "night"],
        "adjs": ["lively", "loud", "vibrant", "fun", "energetic", "festive",
                 "buzzing", "electric", "rowdy", "dazzling"],
    },
    "market": {  # noun-only theme: adjectives and verbs rotate, pairs never repeat
        "nouns": ["market", "stall", "vendor", "souvenir", "handicraft", "silk",
                  "bargain", "spice", "trinket", "basket"],
        "adjs": [],
    },
    "transport": {
        "nouns": ["taxi", "ferry", "bus", "train", "scooter", "airport", "ride",
                  "traffic", "station", "pier"],
        "adjs": ["convenient", "punctual", "reliable", "smooth", "affordable",
                 "swift", "hectic", "bumpy", "cramped", "efficient"],
    },
    "island": {
        "nouns": ["island", "boat", "reef", "coral", "kayak", "cliff", "cave",
                  "trail", "waterfall", "jungle"],
        "adjs": ["exotic", "remote", "untouched", "vivid", "colorful",
                 "secluded", "rugged", "lush", "tranquil", "wild"],
    },
    "spa": {
        "nouns": ["spa", "massage", "sauna", "treatment", "oil", "therapist",
                  "aroma", "robe", "jacuzzi", "steam"],
        "adjs": ["relaxing", "soothing", "gentle", "rejuvenating", "blissful",
                 "calming", "restorative", "heavenly", "pampering", "mellow"],
    },
    "weather": {
        "nouns": ["weather", "sun", "rain", "cloud", "breeze", "humidity",
                  "monsoon", "sky", "heat", "storm"],
        "adjs": ["sunny", "humid", "tropical", "mild", "pleasant", "sticky",
                 "torrential", "balmy", "sweltering", "refreshing"],
    },
    "culture": {
        "nouns": ["culture", "tradition", "festival", "dance", "ceremony",
                  "costume", "ritual", "craft", "heritage", "custom"],
        "adjs": ["fascinating", "rich", "unique", "traditional", "captivating",
                 "enchanting", "memorable", "charming", "mystical", "authentic"],
    },
    "city": {
        "nouns": ["city", "street", "skyline", "palace", "tower", "bridge",
                  "river", "canal", "rooftop", "alley"],
        "adjs": ["bustling", "sprawling", "dynamic", "chaotic", "dense",
                 "towering", "gritty", "glittering", "panoramic", "urban"],
    },
    "price": {
        "nouns": ["price", "cost", "budget", "fee", "deal", "discount", "rate",
                  "tip", "bill", "exchange"],
        "adjs": ["cheap", "expensive", "reasonable", "fair", "steep", "modest",
                 "hefty", "negotiable", "economical", "lavish"],
    },
    "people": {
        "nouns": ["family", "couple", "traveler", "tourist", "kid", "friend",
                  "group", "visitor", "local", "crew"],
        "adjs": ["gracious", "genuine", "humble", "curious", "talkative",
                 "sincere", "easygoing", "outgoing", "gregarious", "amiable"],
    },
    "wildlife": {
        "nouns": ["elephant", "monkey", "bird", "butterfly", "turtle", "gecko",
                  "orchid", "mangrove", "lagoonarium", "sanctuary"],
        "adjs": ["playful", "adorable", "graceful", "curiously", "tame", "shy",
                 "magnificent", "delicate", "thriving", "protected"],
    },
}
# "curiously" above would be an adverb; swap for a clean adjective.
THEMES["wildlife"]["adjs"][3] = "nimble"

# rotating pool for the noun-only market theme: pairs (adj, market noun) are
# used at most once corpus-wide, so no market a2n edge reaches weight 2
MARKET_ADJS = [
    "bright", "busy", "noisy", "quaint", "rustic", "eclectic", "quirky",
    "cluttered", "aromatic", "varied", "abundant", "teeming", "haphazard",
    "sprightly", "motley", "labyrinthine", "boisterous", "makeshift",
    "seasonal", "crowded", "dusty", "shaded", "sunlit", "narrow", "endless",
    "vintage", "handwoven", "fragile", "glossy", "ornamental",
]

GENERAL_ADJS = ["nice", "good", "bad", "lovely", "wonderful", "amazing",
                "awesome", "excellent", "perfect", "decent", "superb",
                "fantastic", "brilliant", "splendid", "delightful",
                "remarkable", "ordinary", "average", "fine", "special"]

TAIL_NOUNS = [
    "adventure", "afternoon", "architecture", "atmosphere", "backpack",
    "balloon", "bamboo", "banana", "bench", "bicycle", "blanket", "boardwalk",
    "bottle", "boulevard", "bowl", "box", "bracelet", "brochure", "buffet",
    "bungalow", "cabana", "cabinet", "camera", "campfire", "candle", "canopy",
    "cart", "cashier", "celebration", "chair", "checkpoint", "chopstick",
    "cinnamon", "cocoa", "coconut", "coffee", "compass", "corridor", "counter",
    "crossing", "cushion", "daybreak", "decor", "detour", "dock", "doorway",
    "dragonfruit", "drizzle", "dune", "earring", "elevator", "entrance",
    "escalator", "esplanade", "excursion", "fabric", "fan", "fountain",
    "frangipani", "garden", "garland", "gate", "gazebo", "ginger", "glass",
    "gondola", "guava", "guidebook", "hallway", "hammock", "harbor", "headland",
    "hibiscus", "hill", "hilltop", "hostel", "hour", "incense", "inlet", "inn",
    "itinerary", "jackfruit", "jasmine", "jetty", "journey", "junction",
    "kiosk", "kite", "lamp", "landing", "lane", "lantern", "ledge", "lemonade",
    "lighthouse", "lime", "lobster", "luggage", "lychee", "mattress",
    "meadow", "midnight", "mile", "mist", "morning", "mosaic", "mountain",
    "museum", "napkin", "nook", "noon", "ocean", "orchard", "outpost",
    "overlook", "papaya", "parade", "parasol", "passage", "passport",
    "pathway", "pavilion", "peacock", "peninsula", "pepper", "pineapple",
    "plateau", "platform", "plaza", "pond", "porch", "promenade", "quay",
    "raft", "railing", "recipe", "refuge", "restaurant", "ribbon",
    "rickshaw", "ridge", "roadside", "rock", "roof", "rope", "route",
    "saffron", "sail", "sailboat", "salad", "sarong", "scarf", "schedule",
    "seashell", "seat", "shade", "shelf", "shell", "shopfront", "sidewalk",
    "signpost", "skewer", "smoothie", "snack", "sorbet", "speedboat",
    "staircase", "stairway", "stand", "starfruit", "stepstone", "stool",
    "suitcase", "summit", "swing", "tamarind", "tea", "teak", "terrace",
    "ticket", "tile", "torch", "tour", "trailhead", "tray", "trellis",
    "trolley", "tunnel", "turmeric", "umbrella", "valley", "vanilla",
    "veranda", "village", "vine", "walkway", "wall", "wardrobe", "waterfront",
    "wave", "week", "wharf", "window", "zipline",
]
TAIL_NOUNS.remove("wave")  # already a beach noun

# compounds appear as adjacent noun pairs and fuse into one node
COMPOUND_PAIRS = {
    "beach": ("beach", "resort"),
    "food": ("street", "food"),
    "island": ("boat", "trip"),
    "spa": ("spa", "treatment"),
    "culture": ("cooking", "class"),
    "nightlife": ("night", "market"),
}
COMPOUND_WORDS = {"street", "trip", "cooking", "class"}  # parts not already pooled

THAI_COMPOUNDS = {"food": ("thai", "food"), "spa": ("thai", "massage"),
                  "culture": ("thai", "culture")}

PLACES = [("koh", "samui"), ("chiang", "mai"), ("wat", "pho"), ("khao", "lak"),
          ("hua", "hin"), ("ao", "nang")]

# conative verbs that take a direct object in the templates: (lemma, past)
CONATIVE_OBJECT = [
    ("enjoy", "enjoyed"), ("love", "loved"), ("like", "liked"),
    ("adore", "adored"), ("avoid", "avoided"), ("revisit", "revisited"),
    ("appreciate", "appreciated"), ("value", "valued"), ("hate", "hated"),
    ("dislike", "disliked"), ("recommend", "recommended"),
]
# experiencer conatives: subject is a thing, object is a person
CONATIVE_EXPERIENCER = [
    ("impress", "impressed"), ("please", "pleased"), ("satisfy", "satisfied"),
    ("surprise", "surprised"), ("astonish", "astonished"),
]
# participles safe as "the X was <participle>" (pattern 4)
P4_PARTICIPLES = ["recommended", "appreciated", "loved", "enjoyed", "valued",
                  "liked", "adored"]

# non-conative verbs: their pairs are filtered from the graph, which is the point
PLAIN_VERBS = [
    ("visit", "visited"), ("explore", "explored"), ("walk", "walked"),
    ("order", "ordered"), ("book", "booked"), ("watch", "watched"),
    ("join", "joined"), ("rent", "rented"), ("reach", "reached"),
    ("pass", "passed"), ("wander", "wandered"), ("cross", "crossed"),
    ("climb", "climbed"), ("photograph", "photographed"), ("attend", "attended"),
    ("discover", "discovered"), ("sample", "sampled"),
]

IRREGULAR_VERBS = {  # form -> lemma
    "was": "be", "were": "be", "is": "be", "are": "be", "am": "be",
    "been": "be", "being": "be", "had": "have", "has": "have",
    "having": "have", "did": "do", "does": "do", "done": "do", "went": "go",
    "gone": "go", "got": "get", "gotten": "get", "took": "take",
    "taken": "take", "saw": "see", "seen": "see", "ate": "eat",
    "eaten": "eat", "came": "come", "made": "make", "found": "find",
    "left": "leave", "felt": "feel", "kept": "keep", "met": "meet",
    "paid": "pay", "said": "say", "sat": "sit", "slept": "sleep",
    "spent": "spend", "stood": "stand", "swam": "swim", "swum": "swim",
    "told": "tell", "thought": "think", "bought": "buy", "brought": "bring",
    "built": "build", "caught": "catch", "chose": "choose",
    "chosen": "choose", "drank": "drink", "drunk": "drink", "drove": "drive",
    "driven": "drive", "flew": "fly", "flown": "fly", "gave": "give",
    "given": "give", "heard": "hear", "held": "hold", "knew": "know",
    "known": "know", "ran": "run", "rode": "ride", "ridden": "ride",
    "sang": "sing", "sung": "sing", "spoke": "speak", "spoken": "speak",
    "woke": "wake", "woken": "wake", "wrote": "write", "written": "write",
    "meant": "mean",
}
IRREGULAR_NOUNS = {"children": "child", "men": "man", "women": "woman",
                   "people": "person", "feet": "foot", "teeth": "tooth"}
IRREGULAR_ADJS = {"better": "good", "best": "good", "worse": "bad",
                  "worst": "bad"}

# words that only pad the lexicon (never emitted); gives the spelling
# corrector a realistic search space
FILLER_WORDS = [
    "about", "above", "accept", "account", "across", "action", "address",
    "advice", "agree", "ahead", "allow", "almost", "alone", "along",
    "already", "although", "always", "amount", "animal", "answer", "anybody",
    "anyone", "anything", "anyway", "appear", "apple", "argue", "around",
    "arrive", "article", "artist", "aside", "assume", "attention", "author",
    "autumn", "avenue", "awake", "aware", "balance", "barely", "basic",
    "battle", "became", "become", "before", "begin", "behind", "believe",
    "belong", "below", "beside", "between", "beyond", "bother", "bottom",
    "branch", "breathe", "brother", "business", "button", "cancel",
    "capital", "captain", "careful", "carry", "castle", "center", "central",
    "century", "certain", "chance", "change", "chapter", "charge", "choice",
    "circle", "citizen", "class", "climate", "close", "clothes", "collect",
    "college", "common", "company", "compare", "complete", "concern",
    "condition", "consider", "contain", "continue", "control", "corner",
    "correct", "country", "course", "cover", "create", "current", "customer",
    "damage", "danger", "daughter", "decide", "declare", "degree", "deliver",
    "demand", "depend", "describe", "design", "desire", "detail", "develop",
    "device", "dinner", "direction", "discuss", "distance", "divide",
    "doctor", "dollar", "double", "doubt", "dozen", "dream", "dress",
    "during", "early", "earth", "easily", "easy", "edge", "effect", "effort",
    "eight", "either", "electric", "element", "eleven", "employ", "empty",
    "enemy", "engine", "enough", "enter", "entire", "equal", "escape",
    "evening", "event", "every", "exact", "example", "except", "exercise",
    "expect", "explain", "express", "extra", "familiar", "famous", "fashion",
    "father", "favor", "feather", "feature", "field", "fifteen", "fifty",
    "figure", "final", "finger", "finish", "first", "flower", "follow",
    "forest", "forget", "former", "mosquito", "forward", "fourteen", "fourth",
    "frame", "front", "fruit", "further", "future", "gather", "general",
    "gentleman", "glance", "gravity", "grocery", "ground", "guard", "guess",
    "half", "handle", "happen", "hardly", "health", "heavy", "history",
    "hollow", "honey", "however", "hundred", "hunger", "hurry", "husband",
    "imagine", "important", "include", "increase", "indeed", "indicate",
    "industry", "inform", "inside", "instead", "intend", "interest",
    "involve", "iron", "itself", "jacket", "kitchen", "ladder", "language",
    "large", "later", "laugh", "leader", "least", "leather", "length",
    "lesson", "letter", "level", "likely", "listen", "little", "machine",
    "manner", "marble", "matter", "maybe", "measure", "medicine", "member",
    "memory", "mention", "method", "middle", "might", "million", "minute",
    "mirror", "moment", "month", "mother", "motion", "movement", "murmur",
    "nation", "nature", "nearly", "needle", "neighbor", "neither", "nephew",
    "ninety", "nobody", "north", "nothing", "notice", "number", "object",
    "obtain", "occasion", "offer", "office", "often", "opinion", "orange",
    "order", "other", "ought", "outside", "oxygen", "page", "paint", "pair",
    "paper", "pardon", "parent", "partial", "party", "pattern", "pencil",
    "perhaps", "period", "permit", "picture", "piece", "plain", "plan",
    "plant", "plate", "pocket", "point", "poison", "position", "possible",
    "pound", "power", "prepare", "present", "president", "pressure",
    "pretty", "prevent", "print", "prison", "private", "probable", "problem",
    "process", "produce", "product", "promise", "proper", "protect",
    "provide", "public", "purpose", "quarter", "question", "quick", "quite",
    "radio", "raise", "rather", "reason", "receive", "record", "regard",
    "region", "remark", "remove", "repeat", "replace", "reply", "report",
    "require", "respect", "result", "return", "review", "reward", "ribbon",
    "saddle", "safety", "sample", "scale", "scene", "school", "science",
    "search", "season", "second", "secret", "section", "sentence",
    "separate", "serious", "service", "settle", "seven", "several", "shadow",
    "share", "sharp", "shine", "short", "should", "shoulder", "sight",
    "silence", "silver", "similar", "simple", "single", "sister", "sixteen",
    "sleeve", "slight", "smile", "soldier", "someone", "south", "speed",
    "spirit", "spread", "spring", "square", "stable", "start", "state",
    "steady", "still", "stomach", "stone", "store", "story", "strange",
    "strength", "stretch", "strike", "strong", "student", "study", "subject",
    "sudden", "sugar", "supply", "support", "suppose", "surface", "system",
    "table", "talent", "teacher", "thank", "theater", "thick", "thing",
    "third", "thirteen", "thirty", "those", "though", "thousand", "three",
    "through", "thunder", "today", "together", "tomorrow", "tongue",
    "tonight", "total", "toward", "trade", "travel", "treasure", "trouble",
    "twelve", "twenty", "under", "understand", "union", "unless", "until",
    "upper", "usual", "variety", "various", "vessel", "victory", "voice",
    "wagon", "water", "weight", "welcome", "whatever", "wheel", "whether",
    "which", "whisper", "whole", "widow", "winter", "wisdom", "within",
    "without", "woman", "wonder", "wooden", "world", "would", "yellow",
    "yesterday", "young",
]

GLUE_OTHER = ["the", "a", "an", "and", "or", "but", "not", "never", "very",
              "really", "highly", "truly", "quite", "so", "too", "also",
              "again", "everywhere", "at", "in", "on", "near", "with", "for",
              "of", "to", "there", "here", "would", "such"]
GLUE_PRON = ["we", "they", "it", "i", "us", "them"]

COPULAR_EXTRA = {"be", "get", "taste", "smell", "seem", "look", "feel",
                 "sound", "appear", "become", "stay", "remain"}

# stems that must stay out of the lexicon so suffix stripping restores the
# intended lemma ("hated" -> "hate", not "hat")
FORBIDDEN_STEMS = {"hat", "hop", "lov", "lik", "ador", "valu", "desir",
                   "surpris", "pleas", "explor", "sampl", "mod", "mode",
                   "brow", "plea", "stev", "liv"}


def pluralize(noun: str) -> str:
    if noun.endswith("y") and len(noun) > 2 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh", "o")):
        return noun + "es"
    return noun + "s"


def can_pluralize(noun: str) -> bool:
    """True when the plural round-trips back to the noun under the lemma rules."""
    return cpp_lemma(pluralize(noun), "NOUN", {noun}) == noun


# ---------------------------------------------------------------------------
# Mirror of the C++ lemmatizer, used only for auditing
# ---------------------------------------------------------------------------

def sibilant_stem(stem: str) -> bool:
    return stem.endswith(("s", "x", "z", "o", "ch", "sh"))


def double_consonant_end(s: str) -> bool:
    return (len(s) >= 3 and s[-1] == s[-2] and s[-1].isalpha()
            and s[-1] not in "lsz")


def resolve_stem(stem: str, fallback: str, vocab: set) -> str:
    if stem in vocab:
        return stem
    if stem + "e" in vocab:
        return stem + "e"
    if double_consonant_end(stem) and stem[:-1] in vocab:
        return stem[:-1]
    return fallback


def cpp_lemma(word: str, tag: str, vocab: set) -> str:
    if tag == "VERB" and word in IRREGULAR_VERBS:
        return IRREGULAR_VERBS[word]
    if tag == "NOUN" and word in IRREGULAR_NOUNS:
        return IRREGULAR_NOUNS[word]
    if tag == "ADJ" and word in IRREGULAR_ADJS:
        return IRREGULAR_ADJS[word]
    if tag == "VERB":
        if word.endswith("ing") and len(word) > 4:
            return resolve_stem(word[:-3], word[:-3], vocab)
        if word.endswith("ied") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("ed") and len(word) > 3:
            return resolve_stem(word[:-2], word[:-2], vocab)
        if word.endswith("ies") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("es") and len(word) > 3 and sibilant_stem(word[:-2]):
            return word[:-2]
        if word.endswith("s") and not word.endswith("ss") and len(word) > 2:
            return word[:-1]
        return word
    if tag == "NOUN":
        if word.endswith("ies") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("es") and len(word) > 3 and sibilant_stem(word[:-2]):
            return resolve_stem(word[:-2], word[:-2], vocab)
        if (word.endswith("s") and not word.endswith(("ss", "us", "is"))
                and len(word) > 2):
            return word[:-1]
        return word
    if tag == "ADJ":
        if word.endswith("ier") and len(word) > 4:
            return word[:-3] + "y"
        if word.endswith("iest") and len(word) > 5:
            return word[:-4] + "y"
        if word.endswith("est") and len(word) > 5:
            r = resolve_stem(word[:-3], word, vocab)
            return r
        if word.endswith("er") and len(word) > 4:
            stem = word[:-2]
            if stem in vocab:
                return stem
            if stem + "e" in vocab:
                return stem + "e"
            if double_consonant_end(stem) and stem[:-1] in vocab:
                return stem[:-1]
            return word
        return word
    return word


def osa_distance(a: str, b: str) -> int:
    la, lb = len(a), len(b)
    prev2 = [0] * (lb + 1)
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                cur[j] = min(cur[j], prev2[j - 2] + 1)
        prev2, prev = prev, cur
    return prev[lb]


# ---------------------------------------------------------------------------
# Sentence builders: each returns a list of (word, TAG); punctuation included
# ---------------------------------------------------------------------------

class ReviewBuilder:
    def __init__(self, rng: random.Random, market_used_adj, market_used_verb):
        self.rng = rng
        self.market_used_adj = market_used_adj    # (adj, noun) pairs used so far
        self.market_used_verb = market_used_verb  # (verb, noun) pairs used so far
        # every theme noun gets one fixed adjective and one fixed conative
        # verb; repeated mentions concentrate weight on those two edges
        self.sig_adj = {}
        self.sig_verb = {}
        for t, (theme, pools) in enumerate(THEMES.items()):
            adjs = pools["adjs"]
            if not adjs:
                continue
            for k, noun in enumerate(pools["nouns"]):
                self.sig_adj[(theme, noun)] = adjs[k % len(adjs)]
                self.sig_verb[(theme, noun)] = CONATIVE_OBJECT[
                    (k + t) % len(CONATIVE_OBJECT)]

    def theme_adj(self, theme, noun):
        if self.rng.random() < 0.3:
            return self.sig_adj[(theme, noun)]
        return self.rng.choice(THEMES[theme]["adjs"])

    def s_anchor(self, theme, noun):
        adj = self.sig_adj[(theme, noun)]
        verb = "is" if self.rng.random() < 0.2 else "was"
        out = [("the", "OTHER"), (noun, "NOUN"), (verb, "VERB")]
        if self.rng.random() < 0.22:
            out.append((self.rng.choice(["very", "really", "truly"]), "OTHER"))
        out += [(adj, "ADJ"), (".", "OTHER")]
        return out

    def s_conative_fixed(self, theme, noun):
        lemma, past = self.sig_verb[(theme, noun)]
        subj = self.rng.choice(["we", "we", "they", "i"])
        out = [(subj, "PRON")]
        if self.rng.random() < 0.15:
            out.append(("really", "OTHER"))
        out += [(past, "VERB"), ("the", "OTHER"), (noun, "NOUN"), (".", "OTHER")]
        return out

    def s_p1_negated(self, theme, noun):
        adj = self.rng.choice(THEMES[theme]["adjs"])
        return [("the", "OTHER"), (noun, "NOUN"),
                (self.rng.choice(["was", "is"]), "VERB"), ("not", "OTHER"),
                (adj, "ADJ"), (".", "OTHER")]

    def s_p1(self, theme, noun):
        adj = self.theme_adj(theme, noun)
        negate = self.rng.random() < 0.22
        verb = self.rng.choice(["was", "is"])
        out = [("the", "OTHER"), (noun, "NOUN"), (verb, "VERB")]
        if negate:
            out.append(("not", "OTHER"))
        elif self.rng.random() < 0.25:
            out.append((self.rng.choice(["very", "really", "truly"]), "OTHER"))
        out += [(adj, "ADJ"), (".", "OTHER")]
        return out

    def s_p1_multi(self, theme, noun):
        adjs = [self.theme_adj(theme, noun)]
        pool = [a for a in THEMES[theme]["adjs"] if a not in adjs]
        adjs += self.rng.sample(pool, self.rng.choice([1, 1, 2]))
        out = [("the", "OTHER"), (noun, "NOUN"), ("was", "VERB")]
        for k, a in enumerate(adjs):
            if k == len(adjs) - 1 and k > 0:
                out.append(("and", "OTHER"))
            elif k > 0:
                out.append((",", "OTHER"))
            out.append((a, "ADJ"))
        out.append((".", "OTHER"))
        return out

    def s_p1_plural(self, theme, noun):
        if not can_pluralize(noun):
            return self.s_p1(theme, noun)
        adj = self.theme_adj(theme, noun)
        return [("the", "OTHER"), (pluralize(noun), "NOUN"), ("were", "VERB"),
                (adj, "ADJ"), (".", "OTHER")]

    def s_a_n(self, theme, n1, n2):
        a1 = self.theme_adj(theme, n1)
        a2 = self.theme_adj(theme, n2)
        return [(a1, "ADJ"), (n1, "NOUN"), ("and", "OTHER"), (a2, "ADJ"),
                (n2, "NOUN"), ("everywhere", "OTHER"), (".", "OTHER")]

    def s_conative(self, noun):
        lemma, past = self.rng.choice(CONATIVE_OBJECT)
        subj = self.rng.choice(["we", "we", "they", "i"])
        out = [(subj, "PRON")]
        if self.rng.random() < 0.2:
            out.append(("really", "OTHER"))
        out += [(past, "VERB"), ("the", "OTHER"), (noun, "NOUN"), (".", "OTHER")]
        return out

    def s_unrecommend(self, noun):
        return [("we", "PRON"), ("would", "VERB"), ("not", "OTHER"),
                ("recommend", "VERB"), ("the", "OTHER"), (noun, "NOUN"),
                (".", "OTHER")]

    def s_plain_verb(self, noun):
        lemma, past = self.rng.choice(PLAIN_VERBS)
        return [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                (noun, "NOUN"), (".", "OTHER")]

    def s_p4(self, noun):
        part = self.rng.choice(P4_PARTICIPLES)
        out = [("the", "OTHER"), (noun, "NOUN"),
               (self.rng.choice(["was", "is"]), "VERB")]
        if self.rng.random() < 0.4:
            out.append(("highly", "OTHER"))
        out += [(part, "VERB"), (".", "OTHER")]
        return out

    def s_experiencer(self, noun):
        lemma, past = self.rng.choice(CONATIVE_EXPERIENCER)
        person = self.rng.choice(THEMES["people"]["nouns"])
        return [("the", "OTHER"), (noun, "NOUN"), (past, "VERB"),
                ("the", "OTHER"), (person, "NOUN"), (".", "OTHER")], person

    def s_coref(self, theme, noun):
        lemma, past = self.rng.choice(PLAIN_VERBS)
        adj = self.theme_adj(theme, noun)
        plural = can_pluralize(noun) and self.rng.random() < 0.4
        if plural:
            first = [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                     (pluralize(noun), "NOUN"), (".", "OTHER")]
            second = [("they", "PRON"), ("were", "VERB"), (adj, "ADJ"),
                      (".", "OTHER")]
        else:
            first = [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                     (noun, "NOUN"), (".", "OTHER")]
            second = [("it", "PRON"), ("was", "VERB"), (adj, "ADJ"),
                      (".", "OTHER")]
        return [first, second]

    def s_tail(self, tail):
        roll = self.rng.random()
        adj = self.rng.choice(GENERAL_ADJS)
        if roll < 0.45:
            return [("the", "OTHER"), (tail, "NOUN"), ("was", "VERB"),
                    (adj, "ADJ"), (".", "OTHER")]
        if roll < 0.75:
            lemma, past = self.rng.choice(CONATIVE_OBJECT)
            return [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                    (tail, "NOUN"), (".", "OTHER")]
        return [(adj, "ADJ"), (tail, "NOUN"), ("at", "OTHER"),
                ("every", "OTHER"), ("turn", "NOUN"), (".", "OTHER")]

    def s_compound(self, pair):
        w1, w2 = pair
        if self.rng.random() < 0.5:
            lemma, past = self.rng.choice(CONATIVE_OBJECT)
            return [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                    (w1, "NOUN"), (w2, "NOUN"), (".", "OTHER")]
        adj = self.rng.choice(GENERAL_ADJS)
        return [("the", "OTHER"), (w1, "NOUN"), (w2, "NOUN"), ("was", "VERB"),
                (adj, "ADJ"), (".", "OTHER")]

    def s_thai_compound(self, pair, theme):
        w1, w2 = pair
        adj = self.rng.choice(THEMES[theme]["adjs"])
        if self.rng.random() < 0.5:
            return [("the", "OTHER"), (w1, "ADJ"), (w2, "NOUN"),
                    ("was", "VERB"), (adj, "ADJ"), (".", "OTHER")]
        lemma, past = self.rng.choice(CONATIVE_OBJECT)
        return [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                (w1, "ADJ"), (w2, "NOUN"), (".", "OTHER")]

    def s_place(self, place):
        w1, w2 = place
        lemma, past = self.rng.choice(PLAIN_VERBS)
        return [("we", "PRON"), (past, "VERB"), (w1, "NOUN"), (w2, "NOUN"),
                ("with", "OTHER"), ("a", "OTHER"), ("guidebook", "NOUN"),
                (".", "OTHER")]

    def s_market_p1(self, noun):
        candidates = [a for a in MARKET_ADJS
                      if (a, noun) not in self.market_used_adj]
        if not candidates:
            return None
        adj = self.rng.choice(candidates)
        self.market_used_adj.add((adj, noun))
        return [("the", "OTHER"), (noun, "NOUN"), ("was", "VERB"),
                (adj, "ADJ"), (".", "OTHER")]

    def s_market_verb(self, noun):
        candidates = [lp for lp in CONATIVE_OBJECT
                      if (lp[0], noun) not in self.market_used_verb]
        if not candidates:
            return None
        lemma, past = self.rng.choice(candidates)
        self.market_used_verb.add((lemma, noun))
        return [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                (noun, "NOUN"), (".", "OTHER")]

    def s_market_stroll(self, n1, n2):
        lemma, past = self.rng.choice(PLAIN_VERBS)
        return [("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                (n1, "NOUN"), ("and", "OTHER"), ("the", "OTHER"),
                (n2, "NOUN"), (".", "OTHER")]


def theme_noun_block(rb, rng, theme, noun, full=True):
    """Sentences for one mention of a theme noun: a fixed-adjective anchor,
    usually the noun's fixed conative verb, sometimes a variety sentence."""
    out = [rb.s_anchor(theme, noun)]
    if rng.random() < (0.72 if full else 0.35):
        out.append(rb.s_conative_fixed(theme, noun))
    if full and rng.random() < 0.30:
        out.append(rb.s_p1_negated(theme, noun))
    if full and rng.random() < 0.45:
        roll = rng.random()
        if roll < 0.30:
            out.append(rb.s_p1(theme, noun))
        elif roll < 0.45:
            out.append(rb.s_p1_multi(theme, noun))
        elif roll < 0.60:
            out.append(rb.s_p1_plural(theme, noun))
        elif roll < 0.72:
            out.append(rb.s_p4(noun))
        elif roll < 0.84:
            out.append(rb.s_plain_verb(noun))
        else:
            out.extend(rb.s_coref(theme, noun))
    return out


def build_review(rb: ReviewBuilder, rng: random.Random, primary: str):
    sentences = []

    if primary == "market":
        nouns = rng.sample(THEMES["market"]["nouns"], rng.choice([5, 6]))
        for noun in nouns[:5]:
            s = rb.s_market_p1(noun)
            if s:
                sentences.append(s)
        s = rb.s_market_verb(rng.choice(nouns))
        if s:
            sentences.append(s)
        sentences.append(rb.s_market_stroll(nouns[-2], nouns[-1]))
    else:
        nouns = rng.sample(THEMES[primary]["nouns"], rng.choice([4, 5, 5]))
        for noun in nouns:
            sentences.extend(theme_noun_block(rb, rng, primary, noun))
        if len(nouns) >= 2 and rng.random() < 0.25:
            sentences.append(rb.s_a_n(primary, nouns[0], nouns[1]))
        if rng.random() < 0.25:
            s, person = rb.s_experiencer(rng.choice(nouns))
            sentences.append(s)
        if rng.random() < 0.08:
            sentences.append(rb.s_unrecommend(rng.choice(nouns)))
        if primary in COMPOUND_PAIRS and rng.random() < 0.5:
            sentences.append(rb.s_compound(COMPOUND_PAIRS[primary]))
        if primary in THAI_COMPOUNDS and rng.random() < 0.5:
            sentences.append(rb.s_thai_compound(THAI_COMPOUNDS[primary], primary))
        if rng.random() < 0.15:
            sentences.append(rb.s_place(rng.choice(PLACES)))
        if rng.random() < 0.12:
            sentences.append([("we", "PRON"), ("spent", "VERB"), ("3", "OTHER"),
                              ("days", "NOUN"), ("there", "OTHER"), (".", "OTHER")])
        if rng.random() < 0.5:
            other = rng.choice([t for t in THEMES
                                if t not in (primary, "market")])
            for noun in rng.sample(THEMES[other]["nouns"], rng.choice([2, 3])):
                sentences.extend(theme_noun_block(rb, rng, other, noun,
                                                  full=False))
        if primary == "transport" and rng.random() < 0.6:
            lemma, past = rng.choice(PLAIN_VERBS)
            sentences.append([("we", "PRON"), (past, "VERB"), ("the", "OTHER"),
                              ("tuk-tuk", "NOUN"), (".", "OTHER")])

    for tail in rng.sample(TAIL_NOUNS, rng.choice([2, 2, 3])):
        sentences.append(rb.s_tail(tail))

    rng.shuffle(sentences)
    return sentences


def detokenize(sentences, capitalize_places=True) -> str:
    place_words = {w for p in PLACES for w in p}
    chunks = []
    for sent in sentences:
        words = []
        for k, (w, tag) in enumerate(sent):
            text = w
            if k == 0 and text[0].isalpha():
                text = text[0].upper() + text[1:]
            elif capitalize_places and text in place_words:
                text = text[0].upper() + text[1:]
            if text in {",", "."} and words:
                words[-1] += text
            else:
                words.append(text)
        chunks.append(" ".join(words))
    return " ".join(chunks)


# ---------------------------------------------------------------------------
# Treebank
# ---------------------------------------------------------------------------

def coverage_sentences():
    """Deterministic block giving every content word 12 pure observations."""
    out = []
    noun_frames = [
        [("the", "OTHER"), (None, "NOUN"), ("was", "VERB"), ("nice", "ADJ"), (".", "OTHER")],
        [("we", "PRON"), ("liked", "VERB"), ("the", "OTHER"), (None, "NOUN"), (".", "OTHER")],
        [("a", "OTHER"), ("good", "ADJ"), (None, "NOUN"), ("there", "OTHER"), (".", "OTHER")],
    ]
    adj_frames = [
        [("the", "OTHER"), ("place", "NOUN"), ("was", "VERB"), (None, "ADJ"), (".", "OTHER")],
        [("it", "PRON"), ("was", "VERB"), ("very", "OTHER"), (None, "ADJ"), (".", "OTHER")],
        [(None, "ADJ"), ("place", "NOUN"), ("everywhere", "OTHER"), (".", "OTHER")],
    ]
    verb_frames = [
        [("we", "PRON"), (None, "VERB"), ("the", "OTHER"), ("place", "NOUN"), (".", "OTHER")],
        [("they", "PRON"), (None, "VERB"), ("it", "PRON"), ("there", "OTHER"), (".", "OTHER")],
        [("i", "PRON"), (None, "VERB"), ("the", "OTHER"), ("place", "NOUN"), ("too", "OTHER"), (".", "OTHER")],
    ]
    other_frames = [
        [("the", "OTHER"), ("place", "NOUN"), ("was", "VERB"), (None, "OTHER"), ("nice", "ADJ"), (".", "OTHER")],
        [("we", "PRON"), ("went", "VERB"), (None, "OTHER"), ("the", "OTHER"), ("place", "NOUN"), (".", "OTHER")],
    ]

    def fill(frames, word, reps):
        for r in range(reps):
            frame = frames[r % len(frames)]
            out.append([(word, tag) if w is None else (w, tag) for w, tag in frame])

    nouns = set()
    for pools in THEMES.values():
        for n in pools["nouns"]:
            nouns.add(n)
            if can_pluralize(n):
                nouns.add(pluralize(n))
    nouns.update(TAIL_NOUNS)
    nouns.update(COMPOUND_WORDS)
    nouns.update(w for p in PLACES for w in p)
    nouns.update(["place", "turn", "guidebook", "day", "days"])

    adjs = set()
    for pools in THEMES.values():
        adjs.update(pools["adjs"])
    adjs.update(MARKET_ADJS)
    adjs.update(GENERAL_ADJS)
    adjs.add("thai")
    adjs.add("great")
    adjs.add("delicious")
    adjs.add("expensive")

    verbs = set()
    for lemma, past in CONATIVE_OBJECT + CONATIVE_EXPERIENCER + PLAIN_VERBS:
        verbs.add(lemma)
        verbs.add(past)
    verbs.update(P4_PARTICIPLES)
    verbs.update(IRREGULAR_VERBS.keys())
    verbs.update(["have", "do", "go", "recommend", "would"])

    others = [w for w in GLUE_OTHER if w != "would"]

    for w in sorted(nouns):
        fill(noun_frames, w, 12)
    for w in sorted(adjs):
        fill(adj_frames, w, 12)
    for w in sorted(verbs):
        fill(verb_frames, w, 12)
    for w in sorted(others):
        fill(other_frames, w, 12)
    return out


# ---------------------------------------------------------------------------
# Main
# ---------------------------------------------------------------------------

def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    # uniqueness of pools
    seen = collections.Counter()
    for pools in THEMES.values():
        seen.update(pools["nouns"])
        seen.update(pools["adjs"])
    seen.update(MARKET_ADJS)
    seen.update(GENERAL_ADJS)
    seen.update(TAIL_NOUNS)
    dupes = [w for w, c in seen.items() if c > 1]
    assert not dupes, f"duplicated pool words: {dupes}"

    rng = random.Random(SEED)
    market_used_adj, market_used_verb = set(), set()
    rb = ReviewBuilder(rng, market_used_adj, market_used_verb)

    # --- corpus ---------------------------------------------------------
    theme_order = [t for t in THEMES]
    reviews = []
    for i in range(REVIEWS):
        primary = theme_order[i % len(theme_order)]
        sentences = build_review(rb, rng, primary)
        reviews.append((f"r{i + 1:03d}", sentences))

    # --- treebank -------------------------------------------------------
    tb_rng = random.Random(SEED + 1)
    tb_market_adj, tb_market_verb = set(), set()
    tb_builder = ReviewBuilder(tb_rng, tb_market_adj, tb_market_verb)
    treebank = []
    for i in range(400):
        primary = theme_order[i % len(theme_order)]
        treebank.extend(build_review(tb_builder, tb_rng, primary))
    treebank.extend(coverage_sentences())

    # --- vocabulary and lexicon ------------------------------------------
    emitted = collections.Counter()
    tags_seen = collections.defaultdict(set)
    for _, sentences in reviews:
        for sent in sentences:
            for w, tag in sent:
                if w.isalpha():
                    emitted[w] += 1
                    tags_seen[w].add(tag)
    for sent in treebank:
        for w, tag in sent:
            if w.isalpha():
                emitted[w] += 1
                tags_seen[w].add(tag)

    lexicon = dict()
    for w, count in emitted.items():
        lexicon[w] = 40 + count
    for w in FILLER_WORDS:
        lexicon.setdefault(w, 40 + (hash_stable(w) % 120))
    for w in IRREGULAR_VERBS.values():
        lexicon.setdefault(w, 160)
    for w in ["person", "child", "man", "woman", "foot", "tooth", "good", "bad",
              "tuktuk", "fire", "vodka", "firevodka"]:
        lexicon.setdefault(w, 120)
    for w in COPULAR_EXTRA:
        lexicon.setdefault(w, 200)
    lexicon["delicious"] = max(lexicon.get("delicious", 0), 5000)

    for stem in FORBIDDEN_STEMS:
        assert stem not in lexicon, f"forbidden stem in lexicon: {stem}"

    # --- audits -----------------------------------------------------------
    vocab = set(lexicon)

    # 1) every inflected corpus/treebank token lemmatizes to its intent
    for w in sorted(emitted):
        for tag in tags_seen[w]:
            got = cpp_lemma(w, tag, vocab)
            if tag == "NOUN" and w not in IRREGULAR_NOUNS:
                intent = w
                for pools in THEMES.values():
                    for n in pools["nouns"]:
                        if w == pluralize(n):
                            intent = n
                if w in ("days",):
                    intent = "day"
                assert got == intent, f"noun lemma drift: {w} -> {got} (want {intent})"
            if tag == "VERB":
                if w in IRREGULAR_VERBS:
                    assert got == IRREGULAR_VERBS[w], f"irregular miss: {w}"
                else:
                    bases = {l for l, p in CONATIVE_OBJECT + CONATIVE_EXPERIENCER + PLAIN_VERBS}
                    pasts = {p: l for l, p in CONATIVE_OBJECT + CONATIVE_EXPERIENCER + PLAIN_VERBS}
                    if w in pasts:
                        assert got == pasts[w], f"verb lemma drift: {w} -> {got} (want {pasts[w]})"
                    elif w == "satisfied":
                        assert got == "satisfy", f"verb lemma drift: satisfied -> {got}"
                    elif w in bases or w in ("recommend", "would"):
                        assert got == w, f"verb base drift: {w} -> {got}"
            if tag == "ADJ":
                assert got == w, f"adjective lemma drift: {w} -> {got}"

    # 2) tagdict coverage: emitted content words hit the frequency threshold
    tb_counts = collections.Counter()
    tb_tags = collections.defaultdict(collections.Counter)
    for sent in treebank:
        for w, tag in sent:
            if w.isalpha():
                tb_counts[w] += 1
                tb_tags[w][tag] += 1
    closed = set(GLUE_PRON) | {"the", "a", "an", "and", "or", "but", "not",
                               "never", "very", "really", "quite", "so",
                               "too", "also", "there", "here", "at", "in",
                               "on", "for", "with", "of", "to"}
    for _, sentences in reviews:
        for sent in sentences:
            for w, tag in sent:
                if not w.isalpha() or w in closed:
                    continue
                assert tb_counts[w] >= 10, f"tagdict gap: {w} seen {tb_counts[w]}x"
                top = tb_tags[w].most_common(1)[0][1]
                purity = top / tb_counts[w]
                assert purity >= 0.97, f"tag purity gap: {w} {dict(tb_tags[w])}"

    # 3) spelling: the worked example's typo must resolve to "delicious"
    assert "delicousr" not in lexicon
    near1 = [w for w in lexicon if osa_distance("delicousr", w) <= 1]
    assert not near1, f"words within distance 1 of the fixture typo: {near1}"
    near2 = [w for w in lexicon if osa_distance("delicousr", w) == 2]
    best = max(near2, key=lambda w: (lexicon[w], w))
    ties = [w for w in near2 if lexicon[w] == lexicon[best]]
    assert best == "delicious" and ties == ["delicious"], \
        f"ambiguous correction for delicousr: {sorted(near2)}"

    # --- write ------------------------------------------------------------
    with open(out_dir / "lexicon.txt", "w") as f:
        for w in sorted(lexicon):
            f.write(f"{w}\t{lexicon[w]}\n")

    with open(out_dir / "irregular_forms.txt", "w") as f:
        f.write("# form<TAB>lemma<TAB>POS\n")
        for form in sorted(IRREGULAR_VERBS):
            f.write(f"{form}\t{IRREGULAR_VERBS[form]}\tVERB\n")
        for form in sorted(IRREGULAR_NOUNS):
            f.write(f"{form}\t{IRREGULAR_NOUNS[form]}\tNOUN\n")
        for form in sorted(IRREGULAR_ADJS):
            f.write(f"{form}\t{IRREGULAR_ADJS[form]}\tADJ\n")

    with open(out_dir / "treebank.txt", "w") as f:
        for sent in treebank:
            f.write(" ".join(f"{w}_{tag}" for w, tag in sent) + "\n")

    with open(out_dir / "thailand_reviews.csv", "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["id", "text"])
        for rid, sentences in reviews:
            writer.writerow([rid, detokenize(sentences)])

    n_tokens = sum(len(s) for _, sents in reviews for s in sents)
    print(f"reviews: {len(reviews)}  corpus tokens: {n_tokens}")
    print(f"treebank sentences: {len(treebank)}")
    print(f"lexicon entries: {len(lexicon)}")


def hash_stable(w: str) -> int:
    h = 2166136261
    for c in w.encode():
        h = ((h ^ c) * 16777619) & 0xFFFFFFFF
    return h


if __name__ == "__main__":
    main()
