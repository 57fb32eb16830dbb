// Generated by tools/embed_data.py from data/words.txt. Do not edit.
#pragma once

#include <string_view>

namespace critlab::data {

inline constexpr std::string_view kWordList = R"critlab(aardwolf
abaff
abassin
abduction
abietinic
abiotic
abiuret
ablepharus
abner
abortient
aboveboard
abridger
absampere
abscession
absenter
absolvable
abstention
abysmally
acaciin
acanthial
acceder
accessary
accipiter
acclivity
accouter
acerbity
acerdol
aceship
acetonemia
achango
achingly
acholous
achromic
aciculum
acorea
acoustics
acquirenda
acritol
acrologue
acropora
across
activist
actor
actualism
acyetic
adamastor
adaptative
additory
adelbert
adelphi
adenine
adenophore
adevism
adicea
adipogenic
adjustive
admiral
admonitrix
adnascent
adnoun
adonean
adrienne
adsbud
adulatory
adumbrate
advice
aeciostage
aegeriid
aeginetan
aerocurve
affably
affectible
affecting
affection
affeir
affirmer
afflicted
africanism
afterbirth
afterlight
afterloss
aftermeal
afterwale
afunction
agallop
agathology
aghan
agonistic
agony
agpaite
agrestian
agricultor
agrise
agronomial
agrosteral
aidful
ailantine
ailanto
aircrewman
airward
aisle
aitesis
akamatsu
akawai
akebi
akimbo
alabamian
alani
alarodian
alaster
albert
albescent
albuminoid
albumoid
alcyonaria
alectryon
alertness
alexander
alfridary
algidity
alicoche
alienation
alienicola
aliipoe
alimony
alkanna
alkargen
allamotti
allayer
allelic
allheal
allied
alloerotic
allogamy
allogenic
allotheria
allottee
alluvia
alluvion
almoign
almsgiver
alopecoid
alpen
alphabetic
alphos
altho
altigraph
aluminite
alumni
always
amability
amanita
amazeful
amblystoma
ameliorate
amends
ammonate
amoral
amorality
amphictyon
amphineura
amphitrite
amphoral
amphoric
ampullitis
amused
amylase
amylene
amyous
anabranch
anacamptic
anacanth
anangular
anapaestic
anaphalis
anapnoeic
anasarca
anasitch
ancilla
andreaea
androsin
anesis
angelate
angioma
angiomyoma
angiotonin
angle
anglewing
anglicism
anguillula
anguinidae
angulation
anhistic
anight
animation
anisotrope
anoli
anomura
anorthite
anoscope
anoterite
another
anotia
antecedent
antenna
anterior
anthoid
anthozoan
antiager
anticous
antilepsis
antillean
antilogous
antimarian
antinome
antiquary
antireform
antirent
antisun
antitropy
antitypic
antiurease
antiweed
anusim
anyhow
anyway
apachette
aperu
apetalose
aphoria
aphylly
apionol
aplasia
apologia
apositia
aposthia
apostoless
apozema
applauder
appraiser
appreteur
apsis
aptera
apteryx
apyonin
aquage
aquatinter
aquilawood
aquilian
aquilino
aranzada
arbacin
arbalo
arbitrager
arborary
arbutin
arcacea
arcady
archean
archelon
archeozoic
archflamen
archform
archinfamy
archmocker
arctoid
arcuate
arenae
arendalite
argel
arian
arimasp
arioso
aristides
armadilla
armagnac
armangite
armozeen
array
arrent
arthrodia
arthropod
arthurian
arthuriana
asclepidin
ascones
ascry
aseethe
asiatic
asiatize
asilidae
asmear
aspasia
aspersed
assentient
assist
assizer
associable
associated
assort
asterisk
astigmism
astrantia
astriction
astromancy
asudden
asymbolic
asystolic
ataxonomic
atelo
atheist
athenee
athenianly
atheous
atlantad
atonable
atridean
atwitter
augitic
august
augustus
auhuhu
auntlike
aureate
aurelius
aurilave
austerely
autacoid
autarkical
autobus
autocamp
autodermic
autognosis
autojigger
autolysis
automatic
autonym
autotelic
auximone
auxospore
averment
aviolite
avodire
avshar
avulse
awhirl
azocyanide
azolitmin
azorubine
azumbre
babblishly
babouche
bacach
baccae
bacillian
backie
backveld
bacula
bagdad
baguette
bagwyn
bahar
balangay
baldish
baleful
ballahoo
ballastage
ballaster
balloonish
balloonist
balloting
ballplayer
balneal
balneatory
balneology
balsamer
balsamroot
balza
banns
banyai
baragnosis
barbarize
bardiglio
bargainor
barkey
barlock
baronga
barouni
barrabkie
barrack
barricader
barth
bartlemy
bascule
bashaw
basilidian
basilissa
basongo
baster
bastinade
batekes
batster
battalion
batting
battish
bayness
bdellidae
beachward
beadleism
beater
beaune
bebannered
becard
becharm
bechase
becket
becloak
bedazzle
bedridden
beduke
beeline
befitting
beflea
beforeness
begani
begat
begin
beginner
beglad
begrave
begrim
beisa
bejel
beknown
beladle
belamcanda
belittler
bellow
bellwind
beltene
beltine
bemantle
bemitered
benefactor
benkulen
bennel
benzazine
benzidino
beparse
bepaw
bepile
bepreach
bepuddle
berat
berossos
berret
beseam
beseem
beshriek
beshroud
besmirch
bespouse
bester
bestowment
beswinge
betaine
betrend
betted
bevillain
bewitching
bezonian
bhakti
biasness
bibacity
bibionid
biconic
bigeminum
bilalo
bilboquet
bilharzia
biliation
billhead
billycock
bilobiate
bimeby
bindery
bingle
binukau
biometric
biometry
bipaschal
biphase
biracial
birchman
birthwort
biurea
bivalve
bivascular
bixin
blamer
bland
blankety
blatantly
blaver
bleared
blindweed
blockage
blocklayer
bloomer
bloubiskop
blowpipe
bluesides
blushy
boanergism
boatable
boatsetter
bobcoat
bobierrite
bodement
bodier
bodyless
bodywork
boehmeria
boghole
bollandist
boltonia
boltonite
bombinate
bombo
bombycidae
bombyx
bonairly
bonitary
bonsai
boobily
boomah
boondoggle
booster
bootlessly
bopyridae
boreiad
borize
boron
borromean
bosporan
bosslet
botchery
bovidae
bovinity
bowel
bower
bowler
bowless
bowman
boxfish
boxing
boxwork
boyardism
boycottism
brabejum
bracted
bracteose
bractlet
brahmaic
brahmaness
braireau
brakemaker
branchi
branchia
branchiata
branchipus
branchy
brangling
brasset
braxy
breaghe
breakout
breastrail
brecham
breekums
breeze
brewage
briar
briarean
brickwise
bridgetree
brightwork
brigid
brimmingly
brisk
briskish
brochette
brodder
bromate
bromcresol
bromhydric
bromizer
bromoauric
bronk
broommaker
broomrape
brosimum
brosy
brumby
brunette
brunt
brutal
bryonin
bubby
bucephala
buckstall
buddhaship
buddle
bulldogged
bulletwood
bullocker
bullom
bulrushy
bumblebee
bummler
bumpkin
bunghole
bunglesome
bunkie
buoyage
burgundian
bursattee
bushwa
buskle
bussock
busted
busying
button
buttonbush
buttwoman
butyn
butyne
byously
byroad
bywalker
cabalistic
cabler
cachemia
cacophony
cacti
caddice
caddoan
cadmean
caesarize
caimitillo
caissoned
caitiff
calcareous
calciferol
calcific
calcipexy
calculi
calefactor
calenderer
caliban
calliphora
calotypic
calotypist
caltrop
calvarium
calycozoa
camisado
camoodie
campanian
camphol
campholide
camphorize
campignian
cananga
canangium
cancerroot
candlewick
cankerroot
cannular
canonistic
cantily
canyon
capably
capeskin
capetian
capias
carabineer
carajura
carangid
carapax
caratch
carbethoxy
carcharias
cardigan
cardin
cardona
carination
carioling
carnally
carnelian
caroon
carpale
carpiodes
carpocapsa
carpogone
carport
carpos
cartful
cartwright
casbah
cashaw
casque
casziel
catalanist
catalectic
cataphylla
cathinine
catholicly
cathryn
catoctin
catting
caulerpa
causticly
caverned
cavina
cayubaban
celaeno
celeste
celiitis
censer
centage
centaurium
centigrade
cephaline
cerastium
ceratitoid
cerberean
cerebronic
cerecloth
certiorari
cervix
cessavit
cessor
cevenole
chack
chaenactis
chaft
chalazian
chaldron
challie
chanca
chaped
chapellany
charac
chargeling
charkhana
charmless
charter
charybdis
chassis
chauchat
chauffeur
chavish
cheat
cheek
cheerful
cheir
chemosis
chesstree
chiasmus
chiastic
chicken
chicquest
chidingly
chiefly
chilenite
chiller
chillsome
chinantecs
chinnam
chionis
chloasma
chock
chockler
cholemia
choral
choralist
chord
choreic
chouette
christener
chromid
chrysaline
chrysin
chukor
chymous
cicatricle
cicutoxin
ciliolate
cimbric
cinderella
cingular
cinnamate
cinnamol
cipango
cipher
cipherhood
circle
circuitman
cistern
citatory
citharista
citizenly
cladodus
claith
clanfellow
clapped
claptrap
claribella
clarice
classman
cleaveful
clifflike
closestool
clothesman
cloveroot
clydesdale
clydeside
clyfaking
coadjacent
coadmit
coadunite
coagula
coagulable
coalbox
coalfitter
coastward
coastwards
coater
cobus
cobwebbing
cocause
coccaceae
coccomyces
cockleboat
cockshut
cocoach
codeine
codman
coeffluent
coelectron
coembrace
coempt
coenobium
coenzyme
coercively
cogway
cogwheel
coherence
coherer
cohibit
cokery
colchis
colipyuria
collegium
colliculus
collidine
collinsite
colombina
colorable
coltskin
columbine
columella
comanche
combiner
comically
commandant
commandeer
commenter
commixtion
commorancy
comous
compassive
compellent
compote
conceited
conception
concher
concocter
concretion
concubine
concussive
condemned
condignly
confined
conflated
confound
conidae
connection
connexivum
conopodium
conqueress
conringia
consentful
conspecies
constrict
content
continual
contise
converter
converting
coolly
copatriot
cophosis
copiapite
coracoid
coraled
corcopali
cordiform
corked
corporas
corrosible
corruption
corsetless
cosegment
cosphered
costanoan
costard
costless
cosurety
cothy
cotorment
cottoneer
countfish
countor
covet
covillager
cowal
cowardness
cowled
cowrie
cozening
cozier
crake
cramp
craner
crankless
crapaud
craquelure
craspedal
cratches
crateral
craterlet
cratometry
craunch
creaght
crease
creed
crenel
crenelated
creosotic
crepance
crimple
crinula
crispiness
crith
critically
croatan
croceic
cromwell
cronartium
cronkness
cropweed
crossable
crotalidae
crotonic
crouchant
croupy
crout
crown
crownwort
crowstick
cruciferae
crudity
cruelize
crumbable
crumblet
crunchable
crush
crusted
cryogenics
cryptal
cryptical
cryptocarp
ctene
ctenophora
cubbyyew
cubicular
cubiform
cuckoomaid
cudava
cudgerie
cuirassier
culicifuge
culler
culottism
cultivar
cultus
cumal
cuminal
cuneate
cuneator
curacy
curarize
curavecan
cureless
curney
cursedness
cursus
curule
cuscus
cusped
cuttlefish
cyanate
cyanole
cyclas
cycling
cyclothem
cymaphyte
cymar
cymbaline
cynodon
cynoidea
cypseline
cyril
cystaster
cysteine
cystic
cystinuria
cystous
cytherea
daffish
dagmar
dalar
dambrod
dammer
daneweed
danewort
dankali
dansant
dantean
dapifer
dapperling
dargsman
darkful
daroo
dartos
dasypaedes
datary
daunii
daviesite
dawning
daymare
deaconry
deadhead
deadhouse
dealkalize
debouch
decalitre
decatize
decayed
decenter
decently
decile
decoyer
decrescent
decrial
decumbence
decursive
dedicant
deerdog
deerweed
defaulture
defiling
defraud
deftly
degas
degressive
degummer
deicer
deifier
deiform
dejerate
delaware
delayable
delayingly
demand
demast
demicolumn
demieagle
demihag
demiourgoi
demiram
demirelief
demodocus
demolition
demophon
demotion
demurely
demyship
dendrite
dendrium
deniable
denim
dentonasal
deplore
deportable
depthing
derival
dermopathy
derout
deruralize
descrive
desertress
desiderata
designee
desiringly
desmosite
despairing
despot
deterge
determining
detrited
develop
deviator
devily
devoir
devotee
dexterity
dextrorse
dhunchi
diachronic
diactinal
diapasonal
diarhemia
diary
diathesis
diatomic
diatreme
diazotic
dichotomy
dicoelious
dictaen
dictamnus
dictatory
dictyonine
dictyota
didym
diehard
diethyl
diffluent
diffused
digamy
digestible
diker
dikkop
diligent
diligentia
dillue
dimetallic
dimission
dimmed
dingdong
dinglebird
dinheiro
dioecism
dioicous
dionymal
dionysiac
diphysite
diplopic
dipter
direly
disalign
disanimal
disannul
disapostle
discage
discloser
disclosive
discoideae
discommons
discourse
discreate
discredit
disembark
disepalous
disfurnish
disgeneric
disherent
dishful
dishome
disinvest
dislikable
dismalize
disobey
dispope
disputant
disrobe
disservice
distensive
dithionite
diurnally
diverge
diversory
dividually
divineness
divorce
docile
docity
doctorless
dodder
dodkin
doggoned
dolefish
dolefully
dolefuls
dolium
dollmaker
dolorific
dombeya
donorship
dopatta
dormancy
dorsifixed
dorsonasal
dotal
doublet
doughty
douglas
doveling
dowable
dowed
downcastly
draftage
dragbolt
draggly
dragonkind
dragooner
draine
dramatic
dramatize
dramm
drawboy
drawdown
drawknot
dressing
dribbler
drivehead
droopy
dropping
drowsily
drugger
drukpa
drumly
drumskin
druxiness
duckhouse
duelist
dufterdar
dumbcow
dundasite
dunger
dunner
dutiful
dwayne
dwell
dysphoria
dysphotic
dysprosium
earmark
eatability
ecbatic
eccentric
echitamine
echowise
eclipsable
ecophene
ectoblast
edged
edgerman
edificable
educator
eductor
edwina
effectuate
effulgent
effusion
efoliose
eggfish
eglamore
egressive
eidetic
elaeometer
elaidic
elastance
elderwort
eleatic
eleaticism
electee
electrical
elegiacal
elemicin
eleoblast
eleven
elinvar
ellen
ellipse
elysium
embelia
emblazer
emboliform
embolomeri
embracery
embryonic
emergency
emigrative
emissile
employed
employer
emplume
enarbor
encarditis
enchorial
encoach
ender
ending
endomyces
endoss
endotheca
endungeon
enervative
enfasten
engenderer
engramma
enhusk
enjoiner
enleaf
enoch
enochic
enrapture
ensaint
enterocele
entocornea
entoptical
entrapper
entrepas
entresol
enzootic
eperua
epibasal
epical
epicarid
epifocal
epimeritic
epipastic
episcopate
episperm
epistaxis
epistlar
epistroma
epitaphist
epitomizer
eponymist
equalist
equine
equivalve
eradiation
erect
ereptic
ergophobia
ergot
erlking
erogeneity
erthly
erubescent
erythemic
escheatage
eskimo
esophagean
esparcet
espinal
esselen
essency
essoinment
estheria
estimably
estimate
estrange
ethanal
ethenoidal
ethiopian
ethopoeia
ethoxyl
etiolate
eucalypt
eucosmid
euglenales
eunuch
euphemizer
euryalean
euryalus
eurypterus
eutomous
euxanthic
evader
evangelism
evenblush
evict
evolve
exacter
exactress
exarchal
exaspidean
excaudate
exceptant
exception
excitedly
exciting
excruciate
excuseless
excysted
exhaustive
exhumator
exomis
exorhason
exosmic
expatiate
expectancy
expective
expellant
explore
extrait
extubation
exult
exultancy
exultet
eyedness
eyelash
eyestalk
facellite
faciend
faction
faddiness
fagottist
failure
fainaigue
fainly
fairway
fakirism
falchion
faldage
falerian
fallation
fallostomy
fandango
fanhouse
fanning
farcetta
farinose
farmhousey
farouk
fascicule
fascinator
fashery
fatbrained
fate
fatly
faultage
fautor
favorable
feere
felinity
fellage
felon
feloness
felted
fernbird
feronia
ferrara
ferrotype
fetterless
fettle
feued
fiacre
ficelle
fieldwort
figshell
filander
filiality
filix
fillemot
filling
fillipeen
fingent
fingerleaf
finialed
fireblende
firebrand
firebrick
firstly
fivepins
flaggingly
flaith
flash
flashy
flasklet
flatfish
flathead
flatway
flautino
flavorful
flawless
fleechment
fleshly
flexured
flidder
flirting
flirtish
floater
floatiness
flocculent
floggable
flood
floorward
floriform
florulent
flour
fluorate
fluorite
fluoroform
fluorspar
flybane
flytier
foambow
foeniculum
foenngreek
foggish
foison
foldcourse
folkfree
folkmot
folkmoter
folles
fondish
fondu
fontful
footbridge
footler
footnote
footrail
footstick
forecar
foreday
forejudge
forenoon
foresaid
foresettle
foreshaft
foreshower
forestal
forestlike
foretold
forfault
forkedness
forktail
formably
formative
formylal
forsterite
fotch
fountful
fourrier
fourthly
foveola
foxfish
fractile
fragile
frail
frammit
franklinia
frappe
freckled
freeing
freelage
fretter
fretwork
freyr
fribbler
friesic
friezy
frijol
fringeless
friskily
frisure
frostwork
frowner
frowze
fruit
fugle
fullam
fulvidness
fumagine
fumet
funeral
funest
funniment
furole
furore
furry
furtive
fuseplug
fusicoccum
fuzziness
gabardine
gagership
gaincall
galactoid
galapago
galatea
galax
galga
galipine
galipoidin
galipot
galline
galliwasp
gallonage
gallophobe
gamecock
gamori
gangboard
gangling
ganza
gaoler
garbler
garboard
garfish
garle
gasman
gasteropod
gastroid
gastrulate
gauffered
gauge
gaulding
gedeckt
geerah
geese
gelidly
gemmula
genera
generall
genial
gentisein
geoblast
geochronic
geologian
geomalic
geometroid
gereagle
germania
gessamine
getaway
getup
gewgaw
ghaist
ghilzai
ghostship
ghoulishly
giant
gibbosity
gibbously
gigback
gigmanism
gigunu
gildable
gimmer
gimmerpet
gingersnap
girandola
girderage
girsle
giustina
giveable
gladify
glaring
glass
glassful
glassy
glauconia
gleary
gleesome
gliadin
gliding
glittery
glochidian
gloomfully
gloriole
gloucester
glucosidic
glued
glumal
glume
glumness
glutter
glycoluril
glycosin
gnaphalium
gnetaceae
gnomed
gnomical
gnomist
gnomonics
gnostic
goatfish
gobia
gobiiform
gobinism
goblinry
godpapa
godsake
goldbird
goldstone
goldy
gomarian
gomer
gomeral
gonad
gondola
goniac
gonoblast
gonothecal
gonotype
goober
goody
goodyship
goondie
goosebeak
gorget
gorkhali
gorkiesque
gorsedd
gossampine
goutify
graculus
gradometer
gradualism
grahamite
grainland
gramp
grand
granulose
grapestalk
graphical
grassy
gratitude
gravamen
graveling
gravy
graypate
grazer
greatish
greener
greenhew
greenovite
gregorian
greige
grimace
grimmish
grison
grithman
grits
groaningly
gromatics
groomishly
grothine
groundsman
grouping
growan
growing
grubby
grudge
gruff
gruffness
grumpiness
grutch
guaconize
guaiol
gudesakes
gudget
guessable
guianese
guilloche
gulancha
gunstock
gurian
gurkha
gurnard
gushiness
gushing
guttle
guttulate
gyarung
gymkhana
gympie
gyrotheca
habitate
habitual
haboob
hacienda
haggy
haglet
haida
hairdress
hakim
halbert
halfway
hallmoot
hallucined
halobates
halogenoid
halurgy
hamperman
hamsa
hamshackle
hamster
hamulate
hamulose
handcloth
handed
handicraft
handling
handsmooth
hangee
hanifiya
harangue
harmfully
harpalides
harry
haruspice
harvestbug
haskalah
hatable
hatching
hattemist
hauteur
havermeal
haycap
hazily
hazzan
headcheese
headlong
headreach
headspring
health
heathenize
heathery
heathwort
heaumer
hebamic
hectically
hedonistic
heelball
heftiness
heinie
helio
heliotaxis
helipterum
hellward
helve
hematic
hematosis
hemiekton
hemiolia
hemipodius
hemiterata
hemolysis
hemosporid
hempen
hepaticae
heptadecyl
heptite
herbal
herbarism
herbless
herbwoman
hereditism
heredity
hereupon
hermo
heterodera
heterogamy
heterogene
heterogone
heterolith
hexabiose
hexadecyl
hexamita
hexaploid
hexastichy
higginsite
highman
hilarious
hilarytide
hippuris
hirondelle
hirtella
hispidity
hobbler
hoboism
hocker
hockey
hockshin
hogweed
holdable
holer
holohedric
holophyte
homeozoic
homeric
homicidal
homodynamy
hoodwort
hookaroon
hooligan
hoopless
hoose
hopelessly
hopscotch
hornish
horridity
hoteldom
hotmouthed
hougher
hoveler
hoydenish
huckaback
hucklebone
huldee
humanitary
humite
humorology
huntswoman
huxleian
hyalonema
hydantoin
hydnoid
hydracoral
hydragogy
hydrastis
hydronium
hydrorhiza
hydrosol
hygrology
hymenium
hypaethrum
hyperfine
hyperosmia
hypertely
hypertype
hypnophoby
hypolydian
hyponome
hyposmia
hypothenal
hypozoan
hyppish
hypsodont
icebox
ictus
idiograph
idiopathy
iditol
idoistic
idolous
idrialin
iguanoid
iliadize
iliau
iliopelvic
illegibly
illiquidly
illish
illoyalty
illudedly
illusible
imagine
imamah
imbricated
imburse
immarble
immetrical
immigrate
immodestly
immolate
immoment
impale
impasto
imperance
imperata
impinger
impiously
impluvium
impocket
imposture
impot
impotent
imprint
imprinter
improvisor
inadequacy
inbred
incaic
incapable
incavate
incidence
inclinator
incoherent
incoronate
inculture
indexer
indictor
indigoid
indologist
indurable
inebriety
inethical
inevitable
infantile
infectious
infest
infestant
infielder
inflated
inflow
influxible
inherent
inimically
iniquitous
initialist
initiatrix
injection
injunct
inkstand
inkstone
innovator
inornate
inoxidable
inpour
inrighted
insack
insatiety
insect
insipient
insist
insolency
insomniac
insult
intastable
intercalm
intercede
intereat
intergyral
interliner
intermewed
internals
interright
intoxicated
intratomic
intratubal
introduce
inundator
invariant
invent
invincible
inviting
involucred
iodinophil
iodize
ionogenic
irfan
iriartea
irishwoman
ironbound
ironly
irrigatory
isacoustic
isagogical
isarioid
isatate
isatinic
ishpingo
isindazole
islamist
isobutane
isoerucic
isogonal
isophane
isophene
isotron
issuance
itacist
italianly
italics
itinerate
itzebu
ivyweed
iwaiwa
ixion
jackleg
jacksnipe
jacksonite
jangada
javeline
jayhawk
jejune
jerker
jersey
jesper
jessakeed
jethro
jeweler
jewish
jinni
jirkinet
jitneuse
jobless
johnnycake
johnsonese
joinery
jointed
jointly
jonahism
joseph
josher
journalist
jubilize
jumperism
juncaceae
juniority
juristical
jurupaite
kabaragoya
kaiserdom
kantist
karshuni
karyologic
katharina
katrine
kechel
kecky
keenness
kenmark
kenoticist
kentishman
kenyte
kerasin
kerchiefed
kerchoo
kerril
ketonimin
ketyl
kevin
khuskhus
kiangan
kiblah
kickseys
kiddush
kidnapee
kikki
kilnrib
kilometric
kimberly
kinase
kinesic
kingdomed
kingpin
kirsty
kittereen
kittlepins
klippen
knife
knobstick
knobweed
knothorn
kokam
krausite
krepi
kreutzer
krzysztof
kulanapan
kyrie
kyung
labarum
labilize
laborously
laccainic
lacery
lacing
lacmoid
lactary
lactosuria
ladyish
ladyship
lageniform
lager
lagoon
lakeside
lamedh
lamnoid
lampoonist
landslip
lapful
lapidarist
lapidator
lappish
laralia
larch
larking
larva
larval
lasket
latest
latomy
latonian
laureate
lavant
lawned
lawyer
layout
leadsman
leatherize
leave
leaved
leaver
lecaniinae
lectrice
leeches
legatine
legenda
legibly
leguan
leicester
leiotrichy
lemnaceae
lemon
leniency
lensed
lentilla
lentisc
lepric
leprosis
leptosome
lestrigon
lethargize
leucitite
leucoryx
libant
libellulid
libelously
liberian
libroplast
licania
lightening
lightsman
ligulate
limit
limner
limphault
limpin
limpwort
limurite
linamarin
lindane
lingayat
liniya
linksmith
linopteris
liomyoma
lionizer
lipectomy
liposis
lipped
liter
litheness
lithiasis
lithobioid
lithosol
livedo
livelihood
liveried
lixivium
lizzie
lludd
lobelin
lobola
locality
locellate
lochus
locked
lockerman
lockout
lodicule
loggin
logicality
logistics
longeval
longhair
longtail
longulite
lookup
looming
lophortyx
lorcha
lordliness
losenger
lounder
loutish
loveliness
lovely
lucklessly
luiseno
lullian
luminosity
lunge
lupanine
lurchline
luridly
luridness
lurry
luscious
lustfully
lustra
luthier
lycid
lycopodium
lyonetiid
maamselle
mabel
macaque
macaranga
machinule
macilency
mackle
maclura
macroblast
madrepora
magian
magicdom
maguari
mahonia
mahori
maidenism
maidie
maithili
majestious
majolica
malandered
malaxage
malayalam
malease
maleate
malfeasant
malingery
malturned
malty
mamertine
mandelic
mandil
maness
manetti
manganic
mangbattu
mangel
mango
mangosteen
manifested
manitoban
mansionry
manta
mantel
manurable
manzanita
marang
maravedi
marblelike
marbrinus
marcor
marginated
mariolatry
marly
marmalady
marquetry
marrer
married
marrying
martyrizer
marybud
masked
massilia
masterdom
mastigopod
mastodont
matax
matchbook
mateless
matins
matronize
mattapony
maudle
mauve
meadowless
meager
meanly
mecca
mechanizer
meddlingly
mediad
medievally
medinilla
medish
meerkat
meetly
meetness
meibomia
meinie
meiobar
melanippus
meles
meliceric
melituric
meloplast
melopoeic
memberless
memphian
menorrhagy
menseless
menstruum
mensurable
mentum
mercian
merge
meridion
meril
meritable
meropidan
mesabite
mesitylene
mesomorphy
mesoscutum
mesovarian
messan
metabolism
metaling
metaloph
metasome
metatheria
methylal
metin
mettle
miamia
miasmatic
microbar
microblast
microcebus
microzoal
midlenting
midmonthly
midparent
midwest
midwinter
migrainoid
mikado
mikir
mildewy
milliad
miltonist
mimpei
miner
mingleable
minimize
minoress
minter
miquelet
mirliton
mirthful
misbind
mischief
miscorrect
misgauge
misgesture
misleading
mismatch
misogyne
misogynism
misogynist
misologist
misopinion
mispage
mispatch
misplace
misresult
missmark
misthought
misthrift
miswisdom
mitigatory
mitriform
mizraim
moarian
mobster
modalism
modalistic
modenese
module
mogulship
mokaddam
molala
molendinar
molpe
monacha
monachal
monaural
mondayish
mongrelish
mongrelism
monkeypot
monkly
monodize
monoecian
monophote
monotonic
monotypal
monovular
montage
morella
morin
mormyrian
moroseness
morphinic
morphotic
mortgagor
mortling
mosaicism
moschidae
mosetena
mosur
motherer
moujik
moulter
mount
mountlet
mouthwash
movement
moyenless
muckna
mucorrhea
mudden
mugearite
mugwort
muktar
mulctation
multibreak
multiloquy
multiped
multispeed
mumble
mumness
muricid
murid
murinae
muscology
mushed
musiclike
muskwood
musrol
mussuk
mustache
mustafina
mycenaean
mycodermic
mycogone
mycophagy
mydatoxine
myelocele
mygalid
myitis
mynpacht
myolipoma
myology
myoneuroma
myorrhaphy
myosuture
myrick
myriopoda
myrmicid
mystagogy
mystific
mystifier
mythicize
myxotheca
naaman
nabathaean
nahani
nahuatlan
nanism
nappe
napron
narcissan
narrator
narrawood
nassidae
nastiness
nasutiform
nathaniel
naturing
naturopath
nautiloid
navalist
nayaur
nebulation
necker
neckinger
necrotype
nectar
nectareous
nectarian
nectarlike
needful
needlebook
needless
negligent
negus
neighborly
nematoidea
nemeses
neobotany
nephric
nervulose
nettlefoot
nettler
neume
neurinoma
newar
newfangled
newlandite
ngaio
nibbed
nictitant
nidulation
nightfish
nightly
nikau
nimrodian
nineholes
niobic
niobium
nippiness
nisus
nitidulid
nobbler
nobleman
nocuously
nodality
nodular
nodule
noibwood
noisemaker
nominalist
nonacid
nonagon
nonamino
nonassault
nonbasic
nonbitter
nonclastic
nonduality
nonevasive
nonfaddist
nonfelony
noninsect
nonmartial
nonmatter
nonmenial
nonminimal
nonpeltast
nonport
nonpremium
nonranging
nonswearer
nonswimmer
nontenant
nontrading
nontuned
nonviable
nonvolant
nonzero
noreast
norfolk
normanizer
nornorwest
norwegian
nosairian
notarikon
notchweed
nothosauri
noticeably
novate
novena
novennial
nowhere
nucleation
numberful
numud
nunciature
nuncio
nursemaid
nursle
nutgall
nutritory
oatseed
obrogate
obrotund
obsequence
obtected
obviate
obviously
obvolvent
occasioner
occasive
occupable
ochone
ochroma
octameter
octapodic
octavarium
octoalloy
octofoiled
octuply
oculary
odobenus
odontoma
odoom
odoriphore
odorosity
oedipal
offense
offerable
offgrade
officiant
oilstone
oinomancy
oisin
oitava
okapi
oleography
oliva
ombrology
omentitis
omnibusman
omnificent
omniparity
omnivalent
omophagous
onchidium
oneiric
ontologism
oogamy
oologic
ooscopy
opercled
opilionina
opisometer
opposable
opposed
optate
optical
optional
optionary
orangeman
oranger
orbicular
orbless
orcanet
orcinol
ordines
orecchion
organdy
organry
orgasmic
oriole
orolingual
orological
orotinan
orsellic
orthis
orthoaxis
orthopathy
orthopnea
orthose
osamin
oscarella
osirify
osmidrosis
osmoscope
osphyalgia
ossified
ossuary
ostemia
osteologic
ostracize
othinism
otomaco
otosis
ottajanite
ottar
ottavarima
ouakari
ouranos
outargue
outback
outbellow
outbless
outbreed
outchide
outcrier
outfroth
outgeneral
outhiss
outkitchen
outlabor
outlength
outpity
outpop
outpouring
outrace
outrhyme
outroot
outslide
outslink
outsnore
outsport
outspurt
outsteal
outsuck
outthrob
outthwack
outtrump
outwale
ovariotomy
ovenly
overbig
overbrush
overdye
overexpect
overfat
overgirdle
overgloom
overglut
overhead
overhelp
overhollow
overmix
overrusset
oversized
overskim
overslaugh
overspill
oversqueak
overstain
overtariff
ovibos
ovigenic
ovolemma
ovulary
owrelay
oxamidine
oxbrake
oxhuvud
oximation
oxlike
oxphony
oxtongue
oxycyanide
oxyether
oxyhaloid
oxyketone
oxymel
oxystomata
oxytocic
oxytonize
oxytropis
oxyuridae
oyana
oysterfish
ozark
ozonate
ozonous
pabulary
pachak
pachyderm
pachyotia
pacifistic
paddywhack
padroado
pageantic
pahareen
pailful
painproof
paintroot
pakawa
paleology
palermo
palfrey
palillogia
palliata
palmipes
palmlike
palmodic
palometa
palpiform
palpon
palsied
paludament
paludic
pancosmism
pancratic
pandura
pangenetic
panhuman
panlogical
panmug
panomphean
panomphic
panpathy
pantascope
papaship
papelonne
paperful
papery
pappus
paracmasis
paralexic
paranete
paranoia
paraphysis
parate
paraxon
parch
parker
parnassia
paroarium
parsonlike
parvule
pasilaly
passalidae
passe
pastil
patao
patinous
patio
patrols
pattern
patternize
pattypan
paussid
pavonize
pawnage
paxilla
payable
payor
peasantism
peatwood
pebbleware
pecan
pectous
pectus
pedagogue
pedant
pedantism
pedated
pedatifid
pediatry
pediculate
pedomotor
peeress
peeringly
peeved
pegasean
pegbox
peisage
peise
peitho
pelargi
pelargic
pelargonic
pelean
pelobatoid
peltately
pencatite
penfold
pennacook
pennybird
pensacola
pentoic
pentrough
pephredo
peptonizer
peracute
percentual
percival
percolator
percuss
percussor
percutient
peregrine
perfecter
perfection
perfume
periaxial
periegesis
perigee
perimysium
periocular
perit
perite
perkin
perknite
perlingual
perpetrate
persae
pertness
perturbant
pervertive
pestiduct
petaurist
peteman
petrinize
petrissage
pettifog
phacops
phagocytic
phalanxed
phanerogam
pharmaceutical
pheal
pheasant
phial
philograph
philyra
phlebodium
phlogopite
phocomelia
phoenicid
pholidota
phonatory
phonetics
phonologic
phonomimic
phonoscope
phorminx
phormium
phrasable
phryganeid
phthalate
phthisic
phycitol
phyletism
phymatoid
physapoda
physic
physiogeny
physiurgic
phytolatry
pianograph
piarhemia
piazza
pibcorn
pical
pickler
picksman
pickthatch
picryl
pidan
pidgin
piebaldism
pierage
pigeonwood
pighead
pigmaking
pigsty
pileorhize
pilidium
pillowmade
pilocarpus
pilosism
pilum
pimelic
pimgenet
pimpled
pinaceous
pinacolin
pinafore
pinching
pindarical
pinedrops
piney
pinic
pinicolous
pinipicrin
piperonyl
piratical
piririgua
pirouette
pishquow
pistolgram
pistolwise
pitanga
pitcairnia
pitchable
pitchstone
pithoigia
pitmaking
pittacal
pittism
pityocampa
piuri
pivotal
pizza
placative
placean
placoides
plagiarism
plagiarist
planarity
planular
plastify
platinous
platted
plaudite
plautus
player
players
plebeiance
plecotinae
plectopter
plectrum
plenicorn
plentiful
pleomastic
plerotic
plicator
ploimate
plumbean
plumber
plumbous
plump
plurality
poacher
pockhouse
pockweed
podogynium
pogrom
pokerishly
polabian
polabish
polemic
politburo
politeful
politic
polybasite
polychaeta
polygonic
polymixiid
polymyaria
polypian
polyptote
polyzoic
ponticular
pontifical
popishness
popover
populicide
poringly
porogamic
poroscope
porrect
portass
porthetria
porthook
porto
positum
postcava
postcenal
posterity
postfixial
postpagan
postward
pothole
potteress
potwort
pouched
poundless
practicant
practice
praecipuum
praelabrum
pranky
praying
preabdomen
preadapt
preagitate
prealarm
preallege
prebenefit
preboyhood
prechoroid
precisive
preclose
precompel
preconfess
precook
predacity
predata
predebtor
predefence
predeprive
predicably
predicant
prefixable
preflood
prefreeze
prehumor
preimbibe
prelature
preloan
premanhood
prematch
premiate
premodify
premycotic
preobtain
preobvious
prepare
prerailway
prerejoice
prerenal
prereption
prerequest
prescapula
prescout
prescutum
presenter
preshape
prestation
prestress
presumable
presumer
preswallow
pretense
pretone
pretypify
prevocally
priapean
priapusian
pridingly
primevrin
primrose
principium
printerdom
prioninae
prionus
priorate
priscan
prissy
proatheist
proaulion
probal
probeer
problemize
procarp
procris
procuracy
procurrent
prodigy
productid
proethical
proficuous
programma
proholiday
prolocutor
promenade
promise
promising
promissor
promotor
prompts
pronegro
pronghorn
prooemiac
propellant
prophetess
propitial
propopery
proposable
propoxy
propylitic
proritual
proroguer
proscapula
proseminar
prosily
prosimiae
protein
protester
protist
protogine
protophyte
prototypic
protriaene
protutory
proudishly
provence
provicar
provisive
proximity
prunitrin
psellismus
psephite
psephitic
psiloi
psoroptic
psychiatry
psychoid
psychony
pteropegal
pteropidae
ptochogony
ptomain
ptomaine
ptotic
public
puddee
puddled
puddly
puddy
puelchean
puggle
pugil
puissantly
puistie
pulmonaria
pulsator
pulvinus
puncher
puniness
punlet
punningly
punster
puppethood
puppily
puppydom
purifier
purplish
purpurean
purpureous
purpuroid
purulence
purveyable
pushtu
putative
putidness
pyelogram
pygostyled
pylic
pyracantha
pyrexic
pyridone
pyridoxine
pyroxyle
qintar
qoheleth
quackishly
quackle
quadrable
quadruped
quail
quaintness
qualmish
qualmproof
quamasia
quapaw
quartan
quartering
quartern
quash
quashy
quasky
quaternary
quatuor
queriman
quickwork
quinonic
quintin
quintuplet
quirksey
quitch
rabbitwise
rackful
radiogenic
radiogram
radioscope
rancheria
randomish
ranstead
ranunculus
rascallion
raspite
rastle
ratable
ratchel
ravel
razzly
reactance
realtor
reascent
reattire
reawake
rebanish
rebasis
rebeg
rebelieve
rebrush
rebuffet
recasting
recenter
rechain
recompile
reconfine
reconfuse
recreation
rectectomy
rectorate
rectorship
redaub
reddition
redefault
redesire
redissect
redistend
redoubler
redredge
reductor
reduvius
reechy
reeder
reedily
refreshing
regaler
regeneracy
regulable
regulatris
regulize
reharvest
rehaul
reheal
rehoboam
rehonor
reinjure
reinspirit
religate
relinquish
reload
relocate
remask
removably
renewedly
renitency
renneting
renominate
rentrant
renunculus
reomit
repaper
reparatory
repellance
repiner
repitch
replate
report
repossess
reprosper
reprotect
reptatory
repugnancy
reputeless
rerank
reroyalize
resection
reservoir
reset
reshearer
residencer
resmelt
resoak
resojourn
resorcin
resow
respondent
restively
resulting
resuppose
retainder
retaste
retepora
retepore
rethank
retheness
retinalite
retire
retotal
retreative
retrocede
retrusion
reuel
reune
reuniter
revalidate
revenue
reversify
reversing
reversis
revert
revivor
revolution
rhebok
rhinitis
rhodesoid
rhodizonic
rhumba
ribaldrous
ribston
richebourg
rickshaw
rident
ridgeling
ridiculous
riemannian
rifian
rigidness
rikshaw
rimate
ringgoer
ringhals
riper
rippet
ripping
rivalrous
riverhead
riverine
rivularia
roasting
robinia
rockaway
rockcraft
rocketeer
rockiness
rockish
rodger
rodlet
romany
rondo
roofy
roomless
rootcap
rootery
rosalia
rosaruby
rosella
rosellate
rosewood
rosinweed
rosiny
rottenish
roughage
roughener
roughride
roughwork
roundeleer
rowena
rowiness
rowlandite
rowleyan
roxburgh
ruach
rubasse
rubella
rublis
rubricose
rubstone
rucker
ruction
rufus
rugheaded
rukbat
ruled
ruledom
runner
runologist
rushland
russula
ruswut
rutate
rutilated
rutinose
ruvid
sabanut
sabaoth
saberproof
sably
saccharic
saccule
sadite
saeume
sahib
saitic
salmonella
salpingian
salsify
saltery
saltishly
saltwort
salutarily
sammer
samnani
samogonka
sanballat
sanctilogy
sandflower
sandpaper
sannup
santal
sapophoric
sapremic
saraband
sarcobatus
sarcoderm
sarcoline
sarcolytic
sarcophagi
sarra
sasan
satcheled
saturnine
saury
sauterne
sawsmith
saxonize
scabbling
scabby
scabies
scabiosity
scabish
scabrid
scaff
scantness
scapple
scareful
scarfskin
scarping
scaum
scenite
scepsis
schedular
scholastic
schorlous
schwarz
sciolism
sciomachy
sclerotomy
scoleces
scopa
scorper
scourging
scray
screenable
scriever
scriptory
scripture
scriven
scrounger
scumbling
scurf
scurvyweed
scutching
scyllaea
scyphi
seacannie
seaming
seascapist
seatless
seaweedy
seborrhoic
secaline
sector
seedless
seedlip
seege
segment
segmental
segreant
segregable
seismicity
seismology
sekane
selfless
selihoth
semang
semantics
semifascia
semilethal
semilooper
seminole
semionotus
semiramize
semirigid
semisaline
semishaft
semisopor
semitaur
sensate
sension
sepiaceous
seraphlike
serger
seringal
seriolidae
serious
serolin
serology
serousness
serpently
serpulidae
serrulate
sertulum
sesuto
setaria
setline
settling
settlor
seventeen
sewerless
sexipolar
sexlike
sextant
sextarius
sextipolar
shacky
shaglet
shagreened
shagroon
shahzada
shake
shamrock
shandygaff
shandyism
sharia
sharny
shastraik
shatterwit
shaving
shawy
sheeny
sheepnose
shekel
sheld
shelfmate
shellburst
shelta
sherri
shetlander
sheugh
shibuichi
shineless
shiraz
shirting
shirtlike
shivery
shoeboy
shoestring
shopland
shopmark
shoptalk
shorten
shortish
shotten
shovelman
shrewish
shrimp
shrimper
shrinelet
shulwaurs
sibylesque
siccative
sicklewort
sicula
siculi
sidereally
sideway
sidhe
sidth
siering
siffle
sigillarid
silence
silicane
silicon
sillyish
silvereye
simial
simonious
simoom
simpai
simplism
sinarchism
sindle
sinecure
sinfully
singleness
singsongy
sinistrin
siouan
sirenic
situate
sixer
sixthly
sizable
siziness
skandhas
skeered
skeldrake
skeletal
sketchbook
skibby
skilder
skimmity
skinner
skunktop
slackener
slagman
slangily
slangishly
slare
sledding
sleepingly
slidometer
slimer
slippy
slitheroo
slitlike
slopewise
slopstone
slovene
slowgoing
sluggingly
slumber
slumberer
slummage
sluttish
smallen
smartism
smethe
smiler
smook
smudged
smudgy
snakiness
snipish
snippet
snirt
snorting
snortle
snottily
snubbing
soaper
soapery
soaproot
soary
soberwise
sobriquet
societist
socorrito
sodded
soddenness
sofoklis
soilproof
sojourner
solanaceae
soldo
solfeggio
solicit
solitidal
somatic
somatous
somewheres
somnolize
sonantized
songle
sonic
soord
soother
sophic
sophister
sopping
sopranist
sorbus
sorcery
soreness
soricid
sorner
sorrowless
soshed
sotnik
sottage
sottish
souchet
sourdine
soutane
sovietist
spaewife
spane
spaniolize
spanking
sparadrap
sparassis
sparklet
spartle
spasm
spasmotin
spatialize
spaver
spavie
spawner
speckiness
spectatory
speculate
speechify
speel
spelaean
spendful
spenerism
speranza
sphacel
sphaerium
spheges
sphex
spicecake
spillover
spindlage
spinebill
spinningly
spinozist
spiralwise
spirillar
spiritize
spirituous
spitchcock
spitish
splasher
spleet
splenocele
splitnew
spoken
sponge
spongida
sponsorial
spoolful
spooniness
sporicide
sporuloid
spret
sprigger
sproutling
spunky
spurmoney
spurner
sputumary
squaliform
squamiform
squarishly
squarrose
squawker
squawroot
squiralty
squireen
squitch
stackyard
stadia
stageable
staggarth
stalklet
stalklike
stalling
stanchless
stannoxyl
starbloom
starchlike
starnie
starvedly
starwise
stasidion
state
stathmoi
statocracy
stauk
stealingly
steamerful
stearone
steepweed
stemming
steno
stenofiber
stenton
stentor
stentorian
sterile
sterilize
sternad
sternworks
stewardry
stickle
stilted
stinkingly
stinter
stitchery
stiver
stockmaker
stockton
stokerless
stoma
stomate
stooper
stopwater
storage
stormy
story
storymaker
stowce
stowing
strack
stradine
strandage
strander
stranger
strati
streamling
streamway
strength
stretch
stridulant
striola
stroky
strolld
strumella
strut
struvite
stuckling
stultifier
stumbler
stupe
stupulose
sturnella
stylohyoid
stylus
suanitian
subalary
subbase
subdecimal
subdial
suberone
subetheric
subhero
subintent
subjoin
subjoinder
sublevel
sublighted
sublimer
submediant
submucosal
submundane
suboctave
subordinal
subregular
subtitle
subulated
subwater
succinamic
succulency
succumbent
suchness
suckfish
sueve
suevic
suffused
sugared
sugarelly
suicide
suiones
sulaba
sulfamyl
sulphated
sulphonal
sultry
sulung
summed
sundar
sunlight
sunstroke
sunup
superavit
superfat
superhuman
supernal
suprapedal
surcharger
surfacer
surge
surgeoncy
surgerize
surrealist
surrection
suspensive
sustention
sutlerage
suttin
suzerain
svelte
swaimous
swaird
sward
swart
swatheable
swatow
swellage
swietenia
swimmist
swinepipe
swirring
swithen
swollenly
swonken
sylloge
sylvanize
symphonize
symptomize
synangic
synaxarium
syncarpy
syncytial
synodsman
synoecize
synoptical
syntenosis
syringitis
syrphid
syrphidae
syryenian
taboret
tacamahac
tacsonia
tafinagh
tailory
tailpipe
tailzie
taintment
takhtadjy
talbot
taled
talliar
talpid
tamanoas
tamarind
tamely
tammany
tamus
tamworth
tanekaha
tanghan
tannin
taperwise
tapsterly
tardigrada
tardy
tariric
tartane
tartarum
tashreef
taslet
tasset
taula
tauranga
taurian
tauric
tautit
tavolatite
taxidermic
taxonomic
tchast
tearably
tearless
teaseably
teaseler
teazer
techily
technetium
tecoma
tedge
teety
tegmental
teinoscope
telemotor
teleostome
telepathy
telepost
telethon
tendriled
tennis
tenor
tenthredo
tention
tentwards
tenuious
teras
teresian
terminant
terminator
termini
teruncius
tervalence
tesuque
tetracerus
tetradecyl
tetrapla
tetrarchic
tetraxonia
tetryl
teucrian
teutondom
thallogen
thallome
thapes
tharginyah
tharm
thatn
theatine
thecaphore
thecium
theetsee
theirn
theism
theophanic
theoric
theorician
thereaways
thereckly
thermonous
thesium
thestreen
theta
thickish
thickset
thievingly
thioindigo
thirdling
thirt
thislike
tholus
thomisidae
thorny
thrashel
threadle
thrillsome
throat
through
thrutch
thujone
thumbless
thumblike
thumbprint
thwartness
thyine
thymallus
ticktacker
tiddle
tidely
tidemaking
tigerlike
tightrope
timeward
timist
timonism
tinkershue
tinny
titanesque
titanitic
titer
titledom
titling
titterel
titulus
toadflax
tobiah
toccata
toddick
toilfully
tokology
tolling
tolstoyism
toluidide
toluidino
toluifera
tonally
tonight
tonoscope
toolmark
tophus
topmost
topswarm
topsyturn
toque
toral
torchlight
torfaceous
torii
tormentive
tormentor
tornal
tornarian
torus
totterish
touching
touristy
tousle
towerwork
towner
townlike
townman
toxoglossa
toxophily
toxostoma
toyshop
trachelium
tragedian
trainbolt
trainee
trainless
traject
trammeling
trampler
tramway
tramwayman
transeptal
transiter
transvert
trapaceous
trapunto
treading
tregohm
tremendous
trest
triarthrus
triaxon
triceps
trichroism
trickful
tricosyl
tricyrtis
trident
tridepside
trier
triglot
trigness
trigyn
triketone
trimacer
trimensual
trimming
trimorph
trimorphic
trineural
tringine
trintle
triode
triodion
triole
triphase
triplasic
triploid
tripodic
tripointed
tripolar
tripudium
tripy
trisemic
trispaston
tristan
tritically
tritoxide
triumphal
trivialize
trochid
troching
troker
trollop
trophodisc
trophonian
tropism
trotlet
truce
truculence
trudellite
trullan
truncheon
trush
trussmaker
trusswork
trustily
truthfully
truvat
tryma
trysting
tsardom
tubercular
tugui
tumion
tumulate
tundish
tunemaker
tungan
tungusic
tunnland
tupaiidae
turbid
turbidness
turbinella
turbotlike
turkoman
turkophil
turma
turmoil
turnbuckle
turnhall
tursiops
tusche
tutory
tutrix
tutworkman
twaddle
twaddledom
tweedy
twick
twiglike
twinborn
twineable
tylus
tympanon
tynwald
typhlosis
typica
typist
tyrantship
tyrrheni
uhlan
uloborid
ulstering
ultrabasic
ulyssean
umbonal
umbrage
umbrel
unabased
unabatedly
unaccuracy
unacoustic
unadapt
unadmire
unadmired
unanimated
unannoyed
unartistic
unattach
unavenging
unawaredly
unballoted
unbark
unbarreled
unbed
unbeget
unbegged
unbelied
unbendsome
unbenight
unbewilder
unbidden
unbilleted
unbindable
unbliss
unbooted
unbosom
uncake
uncalked
unchosen
uncitizen
unclaiming
uncleverly
unclimbing
unclutched
unconfirm
uncontract
uncookable
uncopiable
uncraftily
uncruel
undaunting
undefensed
undelusive
underbody
underdress
underenter
underhill
undermimic
underpoint
undersneer
understage
understain
understeer
understock
undertone
underwash
undiademed
undiligent
undirectly
undisabled
undoweled
undraw
unduped
uneffaced
uneffusing
unemployed
unenamored
unendued
unexigent
unfancied
unfeasably
unfeed
unfeeding
unfester
unfighting
unfirmly
unfishable
unfitten
unflecked
unforetold
unforward
unfragrant
unfraught
unfrizzled
unfructify
unfruity
unfurred
unfussing
ungallant
unglory
ungoddess
ungouty
ungravely
unguessed
unharbored
unhealth
unheaped
unheathen
unheed
unheler
unherolike
unhieratic
unhoard
unholy
unhumored
uniat
unimpair
unimproved
uninfeft
uninked
unintimate
uninvoked
uniplicate
unjoyfully
unknotty
unknowing
unlassoed
unleaky
unlectured
unlensed
unlicensed
unlidded
unloosing
unlotted
unloved
unloyalty
unlusty
unmailable
unmanfully
unmeated
unmedalled
unmew
unmilitant
unmirthful
unmiscible
unmocked
unmodish
unmonistic
unmunched
unmusted
unnamably
unnegro
unniched
unnormal
unnoticing
unoperably
unopulence
unpaving
unperched
unpervious
unpitiful
unplainly
unplump
unpocketed
unpoetized
unpoison
unpope
unpossibly
unpoured
unpraying
unpresumed
unpromised
unpromptly
unproven
unpushed
unquaking
unranked
unready
unrefused
unrefuted
unremote
unrent
unrevolved
unripeness
unroaded
unroast
unrollable
unrung
unsalt
unsapped
unscarb
unscooped
unsecrecy
unseldom
unserflike
unsexlike
unshadowed
unshanked
unshapable
unshocked
unshrived
unsifted
unsighing
unsincere
unsnouted
unsober
unsonable
unsordid
unspiable
unstartled
unsteaming
unstirred
unstitch
unstoked
unstout
unstrip
unsuckled
unsuffused
unsun
unswerved
unswivel
untacked
untackle
unteam
unthinning
unthreshed
untiaraed
untill
untooth
untopping
untossed
untrimmed
untrodden
unvalue
unvenereal
unvigorous
unvisibly
unwadable
unwakening
unwatched
unwater
unweal
unwheedled
unwiliness
unwillful
unwishful
unwitch
unwittily
unwonted
unwrit
upboil
upcushion
updive
upheave
upisland
uplay
upprop
uprend
uprisement
uprist
upsaddle
upshear
upshoot
upstartism
uptaker
uptrain
uragoga
urali
uraninite
uranolite
uranotil
urbacity
urbaneness
urent
urfirnis
urgent
urges
urheen
urnae
urnmaker
urotoxic
usheress
usself
usually
usurpature
uterocele
uvitonic
uzarin
vacona
vacuefy
vacuous
vadose
vagotonia
vakass
valeric
valleywise
valsaceae
vanist
vapid
variatious
varices
varisse
vasectomy
vassaless
vastity
vedda
vedette
vehiculate
veiled
veinery
veldcraft
veliform
vellosine
velvet
venerably
veneridae
venesect
vengefully
venison
vennel
venosity
venously
ventail
venville
verbalist
verchok
veridical
verite
vermiform
verrucose
verser
vesiculata
vesperian
vestryhood
vetanda
vetivenol
vetoistic
vibrancy
viciosity
vihara
vihuela
vijay
vilayet
villanovan
villose
vintener
violably
violaceous
viperling
virilism
virilist
virtually
visaya
viscontal
visitator
visor
vitalist
vocalise
volapuk
volcan
volupt
vomitory
vomiture
vondsira
vorticular
vowless
vulgarity
vulgus
wabunga
waddent
wadeable
wafdist
waferish
waggel
wagnerian
waisted
walleye
wally
waltzer
wanting
wanton
wapisiana
warblet
warderer
warding
wardship
wariness
wartlike
washbrew
washday
washrag
wastable
wattlework
wauch
waveless
wawaskeesh
waxbird
wearable
wearifully
wearily
weasand
weasellike
weather
wedging
weirdlike
weirdly
wellborn
welter
weskit
wetback
whaleboned
whaleroad
whealy
wheatear
whenever
whichways
whift
whiglet
whinberry
whinge
whiningly
whipsaw
whiskful
whitebird
whiteboy
whitecap
whited
whitewall
whizzer
whomever
whoopingly
wickerwork
widowish
widthways
wiggery
wildbore
wildcat
wilder
willingly
willowworm
winberry
windbroach
windore
windowlet
winehouse
winer
winged
wingfish
winkered
winrow
winterfeed
wiremaker
wishly
withywind
witneyer
witter
wittified
wizened
womanist
womanness
wonned
woodenhead
woodine
woodlocked
woollike
wouch
woundable
wowserism
wrainstaff
wrathful
wrecky
wrench
wrenlike
wrestle
wretchedly
wringstaff
wristbone
wristwork
wrongdoing
wrungness
wurzel
wyandot
xanthopia
xenolith
xenomorpha
xeroderma
xeronate
xiphosura
xylaria
xylon
xylophonic
yabble
yamanai
yapman
yawnfully
yezidi
ypsiloid
yuechi
zapas
zarabanda
zenaidinae
zeroaxial
zipping
zirconoid
zoehemerae
zonary
zoned
zonure
zoography
zoolatria
zoomantic
zoonite
zygadenine
zygosphene
zymite
)critlab";

}  // namespace critlab::data
