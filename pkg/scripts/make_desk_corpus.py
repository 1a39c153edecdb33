#!/usr/bin/env python3
"""Generate the bundled desk-scale corpus under data/desk-corpus/.

The corpus is synthetic: sentences are sampled from hand-written
per-language vocabularies with Zipf-like weights.  Word order is random
(character n-gram statistics, not syntax, are what the classifier sees).
A block of international words shared by every language plus heavy
vocabulary overlap inside the Romance group keeps the task non-trivial
for short sentences, especially for unigram models.

Deterministic: fixed seed, fixed vocabularies.  Train and test files are
drawn from disjoint RNG streams, so no sentence is shared verbatim
except by coincidence of short samples.

Usage: python scripts/make_desk_corpus.py [--out data/desk-corpus]
"""

from __future__ import annotations

import argparse
import zlib
from pathlib import Path

import numpy as np

TRAIN_BYTES_TARGET = 50_000
TEST_SENTENCES = 300
SEED = 20240901

# Words every language shares verbatim (loanwords / proper-ish nouns).
INTERNATIONAL = """
hotel radio metro taxi piano foto video bar club golf tennis internet
film festival museum opera pizza sushi yoga safari bungalow iglu kiwi
""".split()

VOCAB: dict[str, str] = {
    "eng": """
the of and to in a is that it was for on are as with his they at be this
have from or by one had not but what all were when we there can an your
which either said if do will each about how up out rather whether she many some
so brother would other into has more her two like him see time could no make
than first been its who now people my made over did down only way find use
may water long little very after words called just where most know get
through back much before go good new write our used me man too any day same
right look think also around another came come work three word must because
does part even place well such here take why things help put years different
away again off went old number great tell men say small every found still
between name should home big give air line set own under read last never us
left end along while might next sound below saw something thought both few
those always looked show large often together asked house world going want
school important until form food keep children feet land side without boy
once animals life enough took sometimes four head above kind began almost
live page got earth need far hand high year mother light parts country
father let night following picture being study second eyes soon times story
boys since white days ever paper hard near sentence better best across
during today others however sure means knew tried told young miles sun ways
thing whole hear example heard several change answer room against top
turned learn point city play toward five using himself usually money seen
didnt car morning im body upon family later turn move face door cut done
group true half red fish plants living black eat short united run book gave
order open ground cold really table remember tree course front american
space inside ago sad early ill learned brought close nothing though idea
""",
    "spa": """
el la de que y a en un ser se no haber por con su para como estar tener le
lo todo pero más hacer o poder decir este ir otro ese si me ya ver porque
dar cuando muy sin vez mucho saber qué sobre mi alguno mismo yo también
hasta año dos querer entre así primero desde grande eso ni nos llegar pasar
tiempo ella sí día uno bien poco deber entonces poner cosa tanto hombre
parecer nuestro tan donde ahora parte después vida quedar siempre creer
hablar llevar dejar nada cada seguir menos nuevo encontrar algo solo pues
lugar mundo mientras mano trabajo caso gente casa bajo mejor momento agua
niño tipo forma historia madre idea palabra mujer hijo cabeza región calle
libro corazón ciudad familia noche puerta jardín estrella camino juego
hermano pueblo cuerpo fuerza escuela amigo perro gato árbol cielo tierra
fuego viento lluvia nieve montaña playa bosque lengua comida mesa ventana
papel reloj zapato camisa sombrero cocina iglesia plaza mercado siglo
gobierno país nación guerra paz salud dinero precio tienda maestro alumno
pregunta respuesta cuento canción música pintura viaje tren avión barco
carta número semana mes lunes domingo verano invierno mañana tarde
temprano despacio rápido fácil difícil feliz triste bueno malo pequeño
alto bajo nuevo viejo joven bonito hermoso querido blanco negro rojo verde
azul amarillo color luz sombra sol luna mar río lago isla piedra flor
hierba campo ciudad puente torre castillo rey reina princesa caballo vaca
oveja pájaro pez abeja hormiga mariposa
""",
    "por": """
o a de que e do da em um para é com não uma os no se na por mais as dos
como mas foi ao ele das tem à seu sua ou ser quando muito há nos já está
eu também só pelo pela até isso ela entre era depois sem mesmo aos ter
seus quem nas me esse eles estão você tinha foram essa num nem suas meu às
minha têm numa pelos elas havia seja qual será nós tenho lhe deles essas
esses pelas este fosse dele tu te vocês vos lhes meus nuns minhas ao longo
casa tempo dia vida ano mundo homem mulher criança cabeça coração cidade
família noite porta jardim estrela caminho jogo irmão povo corpo força
escola amigo cão gato árvore céu terra fogo vento chuva neve montanha
praia floresta língua comida mesa janela papel relógio sapato camisa
chapéu cozinha igreja praça mercado século governo país nação guerra paz
saúde dinheiro preço loja professor aluno pergunta resposta conto canção
música pintura viagem trem avião barco carta número semana mês segunda
domingo verão inverno manhã tarde cedo devagar rápido fácil difícil feliz
triste bom mau pequeno alto baixo novo velho jovem bonito lindo querido
branco preto vermelho verde azul amarelo cor luz sombra sol lua mar rio
lago ilha pedra flor erva campo ponte torre castelo rei rainha princesa
cavalo vaca ovelha pássaro peixe abelha formiga borboleta trabalho coisa
gente lugar momento água menino forma história mãe ideia palavra filho
""",
    "ita": """
il di e la che a in un è per una sono con non mi si lo ma ti ha le cosa io
come ci questo qui hai bene del tu sei nel suo ce la mia te da quello se
più perché no lei così anche sta può due molto essere fatto fare era tutto
loro ne quando me su mio chi noi tutti ancora solo stato sempre fa o
andare dove voglio detto questa niente grazie casa già uno adesso senza
oggi vita della dopo ora quanto siamo certo dire ogni credo altro qualcosa
allora via stai veramente giorno dei volta quella davvero signore madre
tempo anni mondo uomo donna bambino testa cuore città famiglia notte porta
giardino stella strada gioco fratello popolo corpo forza scuola amico cane
gatto albero cielo terra fuoco vento pioggia neve montagna spiaggia bosco
lingua cibo tavolo finestra carta orologio scarpa camicia cappello cucina
chiesa piazza mercato secolo governo paese nazione guerra pace salute
denaro prezzo negozio maestro alunno domanda risposta racconto canzone
musica pittura viaggio treno aereo barca lettera numero settimana mese
lunedì domenica estate inverno mattina sera presto piano veloce facile
difficile felice triste buono cattivo piccolo alto basso nuovo vecchio
giovane bello caro bianco nero rosso verde azzurro giallo colore luce
ombra sole luna mare fiume lago isola pietra fiore erba campo ponte torre
castello re regina principessa cavallo mucca pecora uccello pesce ape
formica farfalla lavoro gente posto momento acqua ragazzo forma storia
mamma idea parola figlio
""",
    "fra": """
le de un être et à il avoir ne je son que se qui ce dans en du elle au
pour pas vouloir sur faire plus dire me on mon lui nous comme mais pouvoir
avec tout y aller voir bien où sans tu ou leur homme si deux mari moi
vous la des même autre après savoir par notre donner prendre leurs aussi
quelque femme petit encore devoir grand main chose jour monsieur demander
alors temps très chez venir lorsque maison heure trois regarder répondre
rester toujours beaucoup jamais enfant tête coeur ville famille nuit porte
jardin étoile chemin jeu frère peuple corps force école ami chien chat
arbre ciel terre feu vent pluie neige montagne plage forêt langue
nourriture table fenêtre papier montre chaussure chemise chapeau cuisine
église place marché siècle gouvernement pays nation guerre paix santé
argent prix magasin maître élève question réponse conte chanson musique
peinture voyage train avion bateau lettre nombre semaine mois lundi
dimanche été hiver matin soir tôt lentement vite facile difficile heureux
triste bon mauvais haut bas nouveau vieux jeune beau cher blanc noir rouge
vert bleu jaune couleur lumière ombre soleil lune mer rivière lac île
pierre fleur herbe champ pont tour château roi reine princesse cheval
vache mouton oiseau poisson abeille fourmi papillon travail gens endroit
moment eau garçon forme histoire mère idée mot fils année monde vie
""",
    "deu": """
der die und in den von zu das mit sich des auf für ist im dem nicht ein
eine als auch es an werden aus er hat dass sie nach wird bei einer um am
sind noch wie einem über einen so zum war haben nur oder aber vor zur bis
mehr durch man sein wurde sei schon wenn hatte seine können deutschen ihre
dann unter wir soll ich eines jahr zwei jahren diese dieser wieder keine
uns etwa weil selbst heute ihren damit gegen alle seit muss doch jetzt
immer ohne kann viele sollte habe könnte menschen mann frau kind kopf herz
stadt familie nacht tür garten stern weg spiel bruder volk körper kraft
schule freund hund katze baum himmel erde feuer wind regen schnee berg
strand wald sprache essen tisch fenster papier uhr schuh hemd hut küche
kirche platz markt jahrhundert regierung land nation krieg frieden
gesundheit geld preis laden lehrer schüler frage antwort geschichte lied
musik malerei reise zug flugzeug schiff brief zahl woche monat montag
sonntag sommer winter morgen abend früh langsam schnell leicht schwer
glücklich traurig gut schlecht klein hoch niedrig neu alt jung schön teuer
weiss schwarz rot grün blau gelb farbe licht schatten sonne mond meer
fluss see insel stein blume gras feld brücke turm schloss könig königin
prinzessin pferd kuh schaf vogel fisch biene ameise schmetterling arbeit
leute ort augenblick wasser junge form mutter idee wort sohn leben welt
""",
    "nld": """
de van een het en in is dat op te zijn voor met die niet aan er om ook als
dan maar bij nog naar uit dit of worden door over ze hij zo wordt tot je
al hebben wat meer geen kan deze werd andere wel veel zich mijn moet onze
hun haar heeft naar toen nu alle onder tussen daar hier tegen jaar twee
kunnen mensen werden na even echter omdat heel wie ik u men doen moest
huis tijd dag leven wereld man vrouw kind hoofd hart stad familie nacht
deur tuin ster weg spel broer volk lichaam kracht school vriend hond kat
boom hemel aarde vuur wind regen sneeuw berg strand bos taal eten tafel
raam papier klok schoen hemd hoed keuken kerk plein markt eeuw regering
land natie oorlog vrede gezondheid geld prijs winkel leraar leerling vraag
antwoord verhaal lied muziek schilderij reis trein vliegtuig boot brief
getal week maand maandag zondag zomer winter ochtend avond vroeg langzaam
snel makkelijk moeilijk blij verdrietig goed slecht klein hoog laag nieuw
oud jong mooi duur wit zwart rood groen blauw geel kleur licht schaduw zon
maan zee rivier meer eiland steen bloem gras veld brug toren kasteel
koning koningin prinses paard koe schaap vogel vis bij mier vlinder werk
plek moment water jongen vorm geschiedenis moeder idee woord zoon
""",
    "fin": """
ja on ei se että en hän oli mitä ole mutta niin minä sinä nyt voi kun ovat
jos vain mun tämä hänen siitä kaikki mitään sen kanssa sitten vielä jotain
mikä täällä sitä kuin minun olen mitä tiedän hyvin sinun meidän pitää tule
joka myös koska heidän itse tästä teidän mistä kaksi paljon aivan ehkä
takaisin mennä tehdä sanoa nähdä tietää tulla antaa ottaa löytää ajatella
puhua katsoa kuulla elää talo aika päivä elämä maailma mies nainen lapsi
pää sydän kaupunki perhe yö ovi puutarha tähti tie peli veli kansa keho
voima koulu ystävä koira kissa puu taivas maa tuli tuuli sade lumi vuori
ranta metsä kieli ruoka pöytä ikkuna paperi kello kenkä paita hattu
keittiö kirkko tori markkinat vuosisata hallitus maa kansakunta sota
rauha terveys raha hinta kauppa opettaja oppilas kysymys vastaus tarina
laulu musiikki maalaus matka juna lentokone vene kirje numero viikko
kuukausi maanantai sunnuntai kesä talvi aamu ilta aikaisin hitaasti
nopeasti helppo vaikea iloinen surullinen hyvä paha pieni korkea matala
uusi vanha nuori kaunis kallis valkoinen musta punainen vihreä sininen
keltainen väri valo varjo aurinko kuu meri joki järvi saari kivi kukka
ruoho pelto silta torni linna kuningas kuningatar prinsessa hevonen lehmä
lammas lintu kala mehiläinen muurahainen perhonen työ ihmiset paikka
hetki vesi poika muoto historia äiti ajatus sana poika elämä
""",
}


def vocabulary(lang: str) -> list[str]:
    words = VOCAB[lang].split()
    # international words appended with low rank so they appear regularly
    return words + INTERNATIONAL


def zipf_weights(count: int) -> np.ndarray:
    ranks = np.arange(1, count + 1, dtype=np.float64)
    w = 1.0 / (ranks + 2.0)
    return w / w.sum()


def make_sentence(rng: np.random.Generator, words: list[str],
                  weights: np.ndarray, min_words: int, max_words: int) -> str:
    k = int(rng.integers(min_words, max_words + 1))
    picks = rng.choice(len(words), size=k, p=weights)
    sentence = " ".join(words[i] for i in picks)
    return sentence[0].upper() + sentence[1:] + "."


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/desk-corpus")
    args = parser.parse_args()
    out = Path(args.out)
    (out / "train").mkdir(parents=True, exist_ok=True)
    (out / "test").mkdir(parents=True, exist_ok=True)

    for lang in sorted(VOCAB):
        words = vocabulary(lang)
        weights = zipf_weights(len(words))

        rng = np.random.default_rng([SEED, zlib.crc32(lang.encode()), 0])
        lines = []
        total = 0
        while total < TRAIN_BYTES_TARGET:
            line = make_sentence(rng, words, weights, 6, 14)
            lines.append(line)
            total += len(line.encode("utf-8")) + 1
        (out / "train" / f"{lang}.txt").write_text(
            "\n".join(lines) + "\n", encoding="utf-8"
        )

        rng = np.random.default_rng([SEED, zlib.crc32(lang.encode()), 1])
        lines = [
            make_sentence(rng, words, weights, 3, 7)
            for _ in range(TEST_SENTENCES)
        ]
        (out / "test" / f"{lang}.txt").write_text(
            "\n".join(lines) + "\n", encoding="utf-8"
        )
        print(f"{lang}: {total} train bytes, {TEST_SENTENCES} test sentences")


if __name__ == "__main__":
    main()
