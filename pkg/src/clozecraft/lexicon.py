"""Shared English word lists for tagging and morphology.

Closed-class words carry their Penn tag directly; open-class words carry a
class string built from the letters N (noun), V (verb), J (adjective) and
R (adverb), e.g. ``"NV"`` for words that are commonly both. Coverage aims at
high-frequency vocabulary; unknown words fall back to suffix heuristics in
the tagger.
"""

# Penn tags for punctuation surfaces.
PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "...": ":", "-": ":", "--": ":", "—": ":", "–": ":",
    "(": "-LRB-", ")": "-RRB-", "[": "-LRB-", "]": "-RRB-",
    '"': "``", "'": "``", "“": "``", "”": "''", "‘": "``", "’": "''",
    "`": "``", "``": "``", "''": "''",
    "$": "$", "%": "NN", "&": "CC", "/": ":",
}

# Words that are (almost) always one closed-class tag.
DETERMINERS = {
    "the", "a", "an", "this", "these", "those", "each", "every",
    "another", "some", "any", "no", "all", "both", "such", "half",
    "either", "neither", "much", "many", "several", "few", "fewer", "most",
    "more", "less", "enough",
}
# of DETERMINERS, the ones that are really adjectives/quantifiers in most
# treebanks; they still behave determiner-like for our purposes
QUANTIFIER_JJ = {"many", "few", "fewer", "several", "much", "more", "most", "less", "enough"}

PREPOSITIONS = {
    "of", "in", "on", "at", "by", "with", "from", "for", "about", "into",
    "onto", "over", "under", "between", "among", "through", "during",
    "against", "toward", "towards", "across", "behind", "below", "above",
    "near", "off", "within", "without", "along", "around", "beyond",
    "despite", "per", "via", "upon", "inside", "outside", "underneath",
    "beneath", "beside", "besides", "amid", "throughout", "to",
}

# Words that subordinate clauses; several double as prepositions or adverbs
# and get resolved by context rules in the tagger.
SUBORDINATORS = {
    "because", "although", "though", "unless", "until", "while", "since",
    "after", "before", "if", "once", "than", "as", "whereas", "whether",
    "that", "when", "whenever",
}

COORDINATORS = {"and", "or", "but", "nor", "yet", "so", "plus"}

MODALS = {"can", "could", "may", "might", "must", "shall", "should", "will", "would", "ought"}

PERSONAL_PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they",
    "me", "him", "her", "us", "them",
    "mine", "yours", "ours", "theirs", "hers", "his",
    "one", "oneself",
}
SUBJECT_PRONOUNS = {"i", "you", "he", "she", "it", "we", "they"}

POSSESSIVE_DETERMINERS = {"my", "your", "his", "her", "its", "our", "their"}

REFLEXIVE_PRONOUNS = {
    "myself", "yourself", "herself", "himself", "itself",
    "yourselves", "ourselves", "themselves",
}

# Indefinite pronouns split by their usual part of speech.
INDEFINITE_NOMINAL = {
    "everybody", "everything", "everyone", "somebody", "something", "someone",
    "anybody", "anything", "anyone", "nobody", "nothing", "none",
}
INDEFINITE_LOCATIVE = {"everywhere", "somewhere", "anywhere", "nowhere"}

WH_PRONOUNS = {"who", "whom", "what", "which", "whoever", "whomever", "whatever", "whichever"}
WH_POSSESSIVE = {"whose"}
WH_ADVERBS = {"when", "where", "why", "how", "whenever", "wherever", "however"}

COMMON_ADVERBS = {
    "not", "n't", "never", "always", "often", "sometimes", "usually",
    "rarely", "seldom", "very", "too", "also", "just", "still", "already",
    "almost", "quite", "rather", "perhaps", "maybe", "soon", "now", "then",
    "here", "there", "away", "back", "even", "only", "really", "again",
    "together", "instead", "indeed", "meanwhile", "nearly", "barely",
    "hardly", "certainly", "probably", "truly", "forever", "ago", "twice",
    "sometime", "anymore", "elsewhere", "abroad", "ahead", "aside",
    "moreover", "however", "therefore", "thus", "otherwise", "nonetheless",
    "furthermore", "anyway", "nowadays", "perfectly", "apart", "alone",
    "downstairs", "upstairs", "overnight", "outdoors", "indoors", "tonight",
    "today", "tomorrow", "yesterday", "else", "somehow", "anyhow", "ever",
    "yet", "far", "well",
}

INTERJECTIONS = {"oh", "hi", "hello", "hey", "wow", "ouch", "hmm", "yes", "please", "okay", "ok", "alas", "hurrah"}

NUMBER_WORDS = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen", "twenty", "thirty",
    "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred",
    "thousand", "million", "billion", "trillion", "dozen",
}

EXISTENTIAL_THERE = "there"

PARTICLES = {"up", "down", "out", "off", "on", "in", "over", "back", "away"}

# -ing forms that are ordinary nouns far more often than verb forms.
ING_NOUNS = {
    "morning", "evening", "thing", "king", "ring", "spring", "wing",
    "string", "ceiling", "feeling", "meeting", "painting", "clothing",
    "building", "nothing", "something", "anything", "everything", "being",
    "beginning", "ending", "wedding", "lightning", "darling", "duckling",
    "sibling", "dumpling", "herring", "pudding", "stocking", "swing",
    "living", "warning", "opening", "drawing", "saying", "training",
    "writing", "reading", "spelling", "greeting", "landing", "crossing",
    "surroundings",
}

# Open-class lexicon: word -> class string.
# N noun, V verb, J adjective, R adverb. Order within the string encodes the
# default preference when context gives no signal.
OPEN_CLASS = {}


def _add(cls, words):
    for w in words.split():
        existing = OPEN_CLASS.get(w, "")
        for ch in cls:
            if ch not in existing:
                existing += ch
        OPEN_CLASS[w] = existing


# Core verbs (base forms). Many double as nouns; those are added to NV below.
_add("V", """
be have do go say get make know think take see come want look use find give
tell ask seem feel try leave put mean keep let begin show hear run move like
live believe hold bring happen write provide sit stand lose pay meet include
continue set learn change lead understand watch follow stop create speak read
allow add spend grow open walk win offer remember love consider appear buy
wait serve die send expect build stay fall cut reach kill remain suggest
raise pass sell require report decide pull return explain hope develop carry
break receive agree support hit produce eat cover catch draw choose wish
drop plan push teach wear argue occur describe prepare discuss achieve
fly climb swim sing dance cook clean wash drive ride jump laugh cry smile
shout whisper listen travel visit invite welcome thank enjoy dislike hate
prefer imagine wonder realize recognize notice observe examine explore
discover invent design measure compare collect gather arrange organize
protect defend attack destroy damage repair improve increase reduce
contain
""")
_add("V", """
depend belong relate refer apply involve affect cause enable encourage
avoid prevent manage fail succeed attempt intend tend deserve promise
refuse deny admit suppose guess doubt trust share borrow lend owe earn
save waste count solve answer reply respond warn remind forget learn
practice train study copy repeat correct check test mark score grade
celebrate marry bury feed fight hide hang hurt lie lay rise shake shine
shoot shut sleep slide smell spell spill spread steal stick sting swear
sweep tear throw wake bend bind bite bleed blow burn burst cast cling
creep deal dig dream drink fit flee forbid forgive freeze grind kneel
knit lean leap light mow prove quit saw sew shear shed sink sow speed
spin spit split spoil stride strike string strive swell swing weave weep
wind withdraw wring arrive enter exit remove replace attach detach press
release lift lower roll slip trip bounce float sink drift settle wander
march hurry rush crawl chase greet obey ignore blame praise scold punish
reward hire fire retire resign apply vote elect govern rule obey found
establish launch cancel delay postpone extend expand shrink melt boil
bake fry grill roast stir pour mix chop slice peel taste smell sound
seem appear become stay remain grow turn prove
""")

# Nouns.
_add("N", """
time year people way day man woman child world life hand part eye place
week case point government company number group problem fact money water
month lot right study book job word business issue side kind head house
friend father mother power hour game line end member law car city name
team minute idea body information parent face others level office door
health person art war history party result change morning reason research
girl boy guy moment air teacher force education foot school room area
matter story king ring spring wing town bridge river mountain lake ocean
sea forest tree flower plant grass leaf branch root seed fruit vegetable
animal bird fish insect horse cow sheep pig chicken duck goat rabbit
mouse cat dog lion tiger bear wolf fox deer elephant monkey snake frog
whale shark bee ant spider butterfly worm village country nation state
region border coast valley desert island hill field farm garden yard
street road path lane corner square market store shop shelf bank church
library museum hospital station airport harbor factory mill mine barn
kitchen bedroom bathroom hallway wall floor roof window ceiling stair
furniture table chair bed couch desk lamp clock mirror picture painting
carpet curtain blanket pillow towel soap bottle cup glass plate bowl
spoon fork knife pan pot oven stove fridge sink bucket basket box bag
suitcase wallet purse key lock chain rope wire tool hammer nail screw
ladder engine machine wheel tire brake seat
""")
_add("N", """
weather storm rain snow wind cloud fog ice sun moon star sky planet earth
rock stone sand soil mud dust fire flame smoke ash light shadow color
sound noise music song voice language letter sentence paragraph page
newspaper magazine article report note message mail stamp envelope
computer phone screen keyboard button camera photo film movie radio
television program channel news sport ball bat net goal race prize
winner loser player coach fan crowd audience stage theater actor actress
singer dancer artist writer poet scientist doctor nurse dentist lawyer
judge police officer soldier sailor pilot driver farmer baker butcher
barber tailor carpenter plumber electrician engineer architect professor
student pupil class lesson course exam test question answer homework
notebook pencil pen eraser ruler chalk board desk subject math science
history geography biology chemistry physics economy market trade price
cost tax wage salary profit loss debt loan budget bill coin cash check
account customer client product goods service brand advertisement
industry agriculture energy electricity gas oil coal steel iron gold
silver copper plastic rubber cotton wool silk leather paper wood brick
cement concrete glass clay weekend holiday vacation birthday wedding
funeral ceremony festival parade concert party dinner lunch breakfast
meal snack dessert bread butter cheese milk cream egg meat beef pork
chicken rice pasta soup salad sauce sugar salt pepper spice honey jam
tea coffee juice wine beer food drink health disease illness fever cold
cough medicine pill drug cure injury wound pain blood bone muscle skin
hair heart lung stomach brain nerve tooth tongue lip ear nose finger
thumb arm leg knee ankle shoulder neck chest back waist hip family
uncle aunt cousin nephew niece grandmother grandfather son daughter
brother sister husband wife baby twin adult neighbor guest stranger
hero enemy crowd member citizen leader president king queen prince
princess minister mayor crown throne castle palace tower gate fence
bridge tunnel dam canal port ship boat ferry canoe sail anchor wave
tide current cliff cave peak slope trail camp tent fire map compass
journey trip tour ticket passport luggage hotel guide souvenir
experience skill habit custom tradition culture religion belief faith
truth lie fear hope joy anger sorrow pride shame honor courage wisdom
knowledge memory thought opinion advice decision choice chance luck
danger risk safety peace freedom justice crime theft thief prison
punishment trial evidence witness victim weapon gun sword shield armor
battle army navy victory defeat treaty flag anthem border empire colony
century decade era period age season autumn winter summer fall spell
event accident emergency rescue damage repair loss gain growth decline
science theory method system process project task goal purpose plan
effort success failure progress record list item detail example sample
copy version model type form shape size weight height length width depth
speed distance direction position location spot site source origin
center edge surface bottom top front rear middle inside outside amount
quantity quality value degree rate ratio percent average total sum
difference piece slice portion share section chapter unit element
feature aspect factor condition situation environment atmosphere mood
""")
_add("N", """
activity buzz theater playgoer troupe variety play audience curtain
passage exercise grammar noun verb article pronoun preposition
conjunction punctuation comma sentence clause phrase item question
choice option answer target reader learner level practice quiz lesson
america americas chapter introduction summary
""")

# Adjectives.
_add("J", """
good new first last long great little own other old right big high
different small large next early young important public bad same able
recent strong whole free true full special easy clear recent certain
personal open red blue green yellow black white brown gray pink purple
orange happy sad angry afraid proud tired hungry thirsty sick healthy
busy lazy quiet loud bright dark warm cool hot cold wet dry clean dirty
heavy light soft hard smooth rough sharp dull thick thin wide narrow
deep shallow tall short fast slow quick safe dangerous cheap expensive
rich poor empty full fresh stale sweet sour bitter salty delicious
beautiful ugly pretty handsome plain fancy simple complex difficult
gentle kind cruel polite rude honest fair unfair brave timid careful
careless curious serious funny strange familiar foreign local national
international ancient modern former future final early late near distant
common rare usual unusual normal odd perfect ready alive dead awake
asleep alone lonely friendly popular famous unknown silent calm nervous
excited bored interested interesting boring amazing wonderful terrible
awful lovely pleasant unpleasant comfortable uncomfortable convenient
possible impossible likely unlikely necessary useful useless helpful
harmful equal similar various double single extra main major minor
entire complete partial actual real false wrong correct exact rough
approximate legal illegal official formal informal private secret
obvious visible invisible flat round square steep level straight curved
broken solid liquid frozen golden silver wooden plastic metal cotton
silk daily weekly monthly annual constant steady frequent sudden gradual
immediate instant permanent temporary original creative practical
logical natural artificial wild tame urban rural eager willing grateful
thankful jealous generous selfish humble noble loyal faithful patient
keen fond aware sure glad sorry fine nice cheerful
""")

# Adverbs formed irregularly or common enough to list.
_add("R", """
quickly slowly carefully quietly loudly easily hardly nearly clearly
suddenly finally recently early late fast hard together everywhere
low high deep long straight wrong tight loose fair extremely fairly
gently badly happily sadly angrily eagerly proudly bravely calmly
simply directly exactly completely entirely mostly mainly especially
particularly generally naturally obviously apparently fortunately
unfortunately surprisingly honestly frankly seriously literally
originally previously currently immediately gradually slightly
strongly deeply widely highly closely safely freely daily weekly
""")

# Frequent noun/verb ambiguities: context decides.
_add("NV", """
work play walk visit hope help change move turn start stop call look use
need show run study plan dream dance cook rain snow answer question mark
test name place face hand head back point end line cause cost cut deal
drink drive fall fear fight fish fly form guess hunt judge jump kick kiss
land laugh lift link list load lock mail march match mind miss mix note
offer order pack paint pass pause pick pile plant point pour press pull
push race rest ride ring rise roll rule sail score seat shape share shout
sign smell smile sound step store surprise swim talk taste tie touch trade
trip trust try vote wash watch water wave wish wonder worry wrap
""")

# Frequent adjective/noun ambiguities.
_add("JN", "light cold firm patient novel subject present past future chief general")

# Frequent adjective/verb ambiguities.
_add("JV", "close clean warm cool dry slow empty separate")

KNOWN_VERB_LEMMAS = frozenset(w for w, cls in OPEN_CLASS.items() if "V" in cls)
KNOWN_NOUN_LEMMAS = frozenset(w for w, cls in OPEN_CLASS.items() if "N" in cls) | ING_NOUNS

ALL_CLOSED_CLASS = (
    DETERMINERS | PREPOSITIONS | SUBORDINATORS | COORDINATORS | MODALS
    | PERSONAL_PRONOUNS | POSSESSIVE_DETERMINERS | REFLEXIVE_PRONOUNS
    | INDEFINITE_NOMINAL | INDEFINITE_LOCATIVE | WH_PRONOUNS | WH_POSSESSIVE
    | WH_ADVERBS | COMMON_ADVERBS | INTERJECTIONS | NUMBER_WORDS
)
