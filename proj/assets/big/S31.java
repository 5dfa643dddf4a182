class S31 extends Abstract11 {
  void enter() {
    new S49();
    if (x1 > 0) {
      send("msg13");
      send("msg15");
      switch (event) {
        case EV862:
          try {
            new S51();
          } catch (IllegalStateException e) {
            new S70();
            new S99();
          }
          break;
        case EV863:
          log("note");
          new S61();
          new S92();
          break;
      }
      switch (event) {
        case EV864:
          new S55();
          switch (event) {
            case EV865:
              log("note");
              new S2();
              new State();
              new Helper();
              break;
          }
          switch (event) {
            case EV866:
              new S67();
              new S94();
              new S24();
              break;
          }
          break;
        case EV867:
          send("msg0");
          switch (event) {
            case EV868:
              send("msg13");
              break;
            case EV869:
              send("msg19");
              new S86();
              break;
          }
          new S20();
          break;
      }
    } else {
      switch (event) {
        case EV870:
          send("msg18");
          switch (event) {
            case EV871:
              new S58();
              new Helper();
              send("msg9");
              new S26();
              break;
            case EV872:
              new S38();
              send("msg15");
              log("note");
              send("msg3");
              break;
            case EV873:
              new S34();
              new S71();
              break;
          }
          new S26();
          switch (event) {
            case EV874:
              new S19();
              new S71();
              send("msg11");
              send("msg2");
              break;
          }
          break;
      }
    }
  }
  public void exit() {
    switch (event) {
      case EV875:
        if (x6 > 0) {
          log("note");
          log("note");
          send("msg1");
          try {
            new S53();
            new State();
            new S2();
            log("note");
          } catch (IllegalStateException e) {
            new S100();
          } finally {
            send("msg5");
            new State();
            send("msg18");
            new S54();
          }
        }
        new S50();
        send("msg2");
        break;
      case EV876:
        try {
          new S38();
          new S72();
          new S22();
          log("note");
        } finally {
          switch (event) {
            case EV877:
              send("msg5");
              break;
            case EV878:
              send("msg10");
              send("msg3");
              break;
            case EV879:
              new S5();
              send("msg19");
              break;
          }
          new S58();
          if (x3 > 0) {
            send("msg1");
            new S70();
            new S81();
            log("note");
          }
          if (x9 > 0) {
            send("msg0");
            new S67();
            new S49();
          }
        }
        new S79();
        break;
    }
    send("msg4");
    send("msg10");
  }
  void handle() {
    send("msg14");
    log("note");
    new S22();
    new S37();
  }
  public void tick() {
    new S15();
    new S56();
    new S15();
  }
  public void reset() {
    new S15();
    try {
      try {
        send("msg15");
        new Helper();
      } catch (IOException e) {
        if (x2 > 0) {
          send("msg17");
          new S40();
          new S78();
          send("msg12");
        } else {
          new S32();
          new S99();
        }
        new S63();
        new S86();
        switch (event) {
          case EV880:
            send("msg11");
            send("msg5");
            new S46();
            new S41();
            break;
          case EV881:
            new S15();
            send("msg13");
            send("msg9");
            new S78();
            break;
        }
      }
    } catch (IllegalStateException e) {
      send("msg6");
      send("msg2");
    } finally {
      new Helper();
      if (x2 > 0) {
        new S83();
      } else {
        send("msg15");
      }
      switch (event) {
        case EV882:
          new S88();
          send("msg0");
          new S17();
          break;
        case EV883:
          new S56();
          send("msg12");
          send("msg4");
          switch (event) {
            case EV884:
              send("msg16");
              break;
            case EV885:
              new S69();
              break;
          }
          break;
      }
    }
    new State();
    switch (event) {
      case EV886:
        switch (event) {
          case EV887:
            new S50();
            break;
        }
        send("msg4");
        send("msg19");
        break;
    }
  }
  void open() {
    switch (event) {
      case EV888:
        log("note");
        new S39();
        break;
    }
    if (x2 > 0) {
      send("msg5");
      send("msg3");
      new S43();
      new S13();
    } else {
      new S82();
      log("note");
      switch (event) {
        case EV889:
          send("msg12");
          switch (event) {
            case EV890:
              new S28();
              break;
            case EV891:
              send("msg5");
              new S35();
              new S81();
              send("msg4");
              break;
          }
          break;
        case EV892:
          send("msg15");
          break;
        case EV893:
          try {
            send("msg3");
            new S37();
            new S89();
            new S87();
          } catch (IOException e) {
            send("msg19");
          } finally {
            log("note");
            new S100();
            send("msg10");
          }
          send("msg4");
          break;
      }
      if (x0 > 0) {
        send("msg17");
        new S96();
        send("msg10");
        send("msg4");
      }
    }
  }
  void close() {
    new S44();
  }
  void start() {
    new S75();
    send("msg8");
    new S80();
    send("msg9");
  }
  void stop() {
    new S68();
  }
  public void pause() {
    new S10();
    try {
      new S6();
      new S59();
      new S11();
      new S17();
    } catch (IOException e) {
      log("note");
      try {
        send("msg8");
        if (x7 > 0) {
          send("msg13");
          send("msg8");
          send("msg7");
        } else {
          send("msg5");
        }
        new S26();
        switch (event) {
          case EV894:
            new S24();
            new S61();
            new S59();
            break;
          case EV895:
            new S81();
            new S20();
            send("msg14");
            break;
          case EV896:
            new State();
            send("msg16");
            new S91();
            new State();
            break;
        }
      } catch (IOException e) {
        try {
          send("msg9");
          new S55();
          send("msg10");
          send("msg3");
        } catch (IllegalStateException e) {
          new S51();
          send("msg18");
        } catch (IllegalStateException e) {
          send("msg18");
          send("msg7");
          send("msg10");
          new S13();
        }
        new S47();
      } catch (TimeoutException e) {
        log("note");
      }
    } catch (IllegalStateException e) {
      switch (event) {
        case EV897:
          send("msg16");
          new S44();
          break;
        case EV898:
          log("note");
          break;
        case EV899:
          send("msg7");
          new S85();
          break;
      }
      try {
        new S34();
        switch (event) {
          case EV900:
            send("msg0");
            break;
          case EV901:
            new S3();
            break;
        }
        if (x9 > 0) {
          send("msg5");
          new S77();
          new S51();
        } else {
          send("msg6");
          new S16();
          new S68();
          new S51();
        }
        new S95();
      } catch (TimeoutException e) {
        switch (event) {
          case EV902:
            send("msg19");
            break;
          case EV903:
            send("msg18");
            new Helper();
            break;
          case EV904:
            new S46();
            new S58();
            send("msg13");
            break;
        }
      } catch (IOException e) {
        new S40();
        send("msg14");
      }
      log("note");
      log("note");
    }
    new S78();
    send("msg1");
  }
}
