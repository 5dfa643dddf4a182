class S91 extends Abstract8 {
  void enter() {
    log("note");
  }
  public void exit() {
    switch (event) {
      case EV2781:
        log("note");
        new S53();
        if (x9 > 0) {
          switch (event) {
            case EV2782:
              new S15();
              log("note");
              send("msg18");
              new S65();
              break;
          }
          log("note");
        }
        break;
    }
    new S46();
    new S85();
  }
  void handle() {
    new S82();
    send("msg12");
    send("msg4");
    new State();
  }
  void tick() {
    if (x1 > 0) {
      send("msg15");
      new S63();
      log("note");
      log("note");
    }
  }
  void reset() {
    switch (event) {
      case EV2783:
        new S35();
        break;
    }
  }
  void open() {
    new S70();
    try {
      switch (event) {
        case EV2784:
          new S51();
          send("msg2");
          break;
        case EV2785:
          send("msg0");
          send("msg4");
          new S57();
          break;
        case EV2786:
          new S50();
          break;
      }
      if (x1 > 0) {
        if (x6 > 0) {
          new S89();
        } else {
          send("msg14");
          send("msg1");
          new S80();
        }
        send("msg2");
        switch (event) {
          case EV2787:
            send("msg4");
            send("msg3");
            break;
        }
      }
    } finally {
      send("msg6");
      new Helper();
      send("msg10");
    }
    new S82();
  }
  void close() {
    log("note");
  }
  void start() {
    switch (event) {
      case EV2788:
        send("msg17");
        new S27();
        if (x8 > 0) {
          try {
            new S85();
          } catch (IOException e) {
            new S73();
            send("msg12");
            send("msg14");
          } catch (TimeoutException e) {
            new State();
            new S84();
          }
          new S55();
          try {
            send("msg10");
            send("msg18");
            send("msg3");
            send("msg5");
          } catch (IOException e) {
            send("msg5");
            log("note");
            send("msg10");
          } finally {
            send("msg11");
            send("msg6");
            new S29();
          }
        } else {
          switch (event) {
            case EV2789:
              send("msg14");
              new S60();
              send("msg0");
              new Helper();
              break;
            case EV2790:
              new S55();
              break;
            case EV2791:
              new S62();
              send("msg8");
              break;
          }
        }
        switch (event) {
          case EV2792:
            send("msg5");
            new Helper();
            break;
          case EV2793:
            if (x5 > 0) {
              send("msg0");
              new S89();
              new S45();
            }
            if (x4 > 0) {
              new S89();
              log("note");
              new S43();
              new S27();
            } else {
              new S81();
              log("note");
              log("note");
              new S93();
            }
            new S75();
            break;
          case EV2794:
            send("msg15");
            try {
              log("note");
            } finally {
              new S14();
              new S36();
              send("msg9");
              new S77();
            }
            switch (event) {
              case EV2795:
                new State();
                break;
            }
            send("msg17");
            break;
        }
        break;
      case EV2796:
        try {
          if (x0 > 0) {
            new Helper();
            new S94();
          } else {
            new S91();
            new S14();
            send("msg14");
          }
          try {
            send("msg3");
            send("msg9");
          } catch (IOException e) {
            new S46();
          } catch (IOException e) {
            new S61();
            new S70();
            new S69();
            send("msg3");
          }
          new S80();
        } catch (IllegalStateException e) {
          new S39();
          new State();
          send("msg9");
        } catch (TimeoutException e) {
          new State();
          log("note");
          send("msg10");
        }
        new S31();
        break;
      case EV2797:
        new S43();
        break;
    }
  }
  public void stop() {
    new S87();
  }
  public void pause() {
    switch (event) {
      case EV2798:
        send("msg16");
        break;
    }
  }
}
