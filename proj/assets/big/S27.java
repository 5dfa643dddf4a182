class S27 extends Abstract2 {
  public void enter() {
    new S67();
    send("msg5");
  }
  void exit() {
    new S90();
  }
  public void handle() {
    new S79();
  }
  void tick() {
    if (x3 > 0) {
      send("msg2");
      send("msg9");
      new Helper();
    }
    send("msg6");
    send("msg11");
  }
  void reset() {
    switch (event) {
      case EV771:
        send("msg14");
        break;
      case EV772:
        new S31();
        try {
          send("msg0");
          new S50();
          try {
            new S23();
            new S9();
            new S14();
            send("msg14");
          } catch (IllegalStateException e) {
            new S77();
            log("note");
          }
          new S19();
        } catch (TimeoutException e) {
          new S39();
          new S90();
          new State();
          new S59();
        }
        break;
      case EV773:
        if (x5 > 0) {
          switch (event) {
            case EV774:
              log("note");
              new S40();
              new S2();
              send("msg14");
              break;
          }
          switch (event) {
            case EV775:
              new S77();
              send("msg1");
              break;
          }
          new S1();
          log("note");
        } else {
          send("msg3");
          new S39();
          new S54();
          if (x1 > 0) {
            log("note");
          } else {
            send("msg15");
            new S63();
            new S79();
          }
        }
        new S10();
        switch (event) {
          case EV776:
            try {
              send("msg3");
              log("note");
              send("msg2");
            } catch (TimeoutException e) {
              log("note");
              new S26();
              new S92();
            }
            send("msg5");
            try {
              send("msg1");
              log("note");
              new S39();
              send("msg3");
            } catch (IllegalStateException e) {
              send("msg18");
              new Helper();
              new S50();
              new S73();
            } catch (IllegalStateException e) {
              send("msg18");
              new S84();
              new S22();
            }
            break;
          case EV777:
            switch (event) {
              case EV778:
                new S46();
                break;
            }
            new S74();
            break;
          case EV779:
            send("msg10");
            new S74();
            if (x9 > 0) {
              send("msg13");
            }
            break;
        }
        new S41();
        break;
    }
  }
  void open() {
    new S13();
    new S62();
    try {
      if (x6 > 0) {
        new S51();
      }
      new S20();
    } catch (TimeoutException e) {
      log("note");
      send("msg4");
      if (x1 > 0) {
        send("msg3");
        try {
          new Helper();
          new S36();
        } catch (TimeoutException e) {
          send("msg2");
          new S74();
          log("note");
          send("msg14");
        } catch (IOException e) {
          new State();
        }
      }
    } finally {
      send("msg14");
      switch (event) {
        case EV780:
          switch (event) {
            case EV781:
              new S58();
              send("msg14");
              new S47();
              break;
            case EV782:
              new S94();
              break;
          }
          new S89();
          new S46();
          break;
        case EV783:
          send("msg16");
          send("msg7");
          break;
        case EV784:
          log("note");
          new S95();
          switch (event) {
            case EV785:
              new S42();
              break;
            case EV786:
              log("note");
              new S81();
              send("msg11");
              break;
            case EV787:
              send("msg4");
              break;
          }
          try {
            new S57();
            new S79();
          } catch (TimeoutException e) {
            send("msg7");
          } finally {
            send("msg2");
          }
          break;
      }
    }
    new S47();
  }
  void close() {
    new S23();
    switch (event) {
      case EV788:
        new S24();
        try {
          send("msg15");
          switch (event) {
            case EV789:
              new S43();
              new S14();
              new S30();
              break;
            case EV790:
              new S6();
              send("msg12");
              new S5();
              new S22();
              break;
            case EV791:
              new S53();
              break;
          }
        } catch (IOException e) {
          send("msg18");
          if (x5 > 0) {
            new S13();
            new S47();
            send("msg6");
            send("msg2");
          }
          send("msg18");
        } catch (IOException e) {
          if (x7 > 0) {
            new S49();
          }
          send("msg14");
          send("msg17");
        }
        new S64();
        break;
      case EV792:
        new S49();
        send("msg9");
        try {
          new S41();
          send("msg3");
          switch (event) {
            case EV793:
              new S13();
              new S58();
              new S61();
              break;
          }
        } catch (TimeoutException e) {
          send("msg9");
        }
        if (x1 > 0) {
          switch (event) {
            case EV794:
              new Helper();
              break;
            case EV795:
              new S13();
              break;
            case EV796:
              send("msg2");
              new S33();
              send("msg13");
              send("msg1");
              break;
          }
          send("msg17");
        } else {
          send("msg3");
          switch (event) {
            case EV797:
              new S1();
              break;
            case EV798:
              send("msg4");
              new Helper();
              send("msg6");
              break;
            case EV799:
              new S25();
              log("note");
              log("note");
              new S25();
              break;
          }
          new S93();
        }
        break;
    }
  }
  void start() {
    log("note");
    send("msg19");
    switch (event) {
      case EV800:
        try {
          new S86();
          send("msg3");
          send("msg3");
          new S68();
        } catch (IOException e) {
          send("msg9");
        }
        break;
    }
  }
  void stop() {
    if (x4 > 0) {
      try {
        send("msg12");
        try {
          new Helper();
          new S66();
          send("msg17");
          new State();
        } catch (IOException e) {
          send("msg5");
        } finally {
          send("msg11");
          new S73();
        }
      } finally {
        new S49();
        send("msg8");
        if (x6 > 0) {
          new S96();
          new S12();
          send("msg5");
          new S14();
        }
      }
      log("note");
    }
    send("msg17");
    send("msg2");
    if (x9 > 0) {
      send("msg0");
      if (x2 > 0) {
        try {
          send("msg12");
          log("note");
          new State();
          new S1();
        } finally {
          send("msg5");
          new S58();
          send("msg0");
        }
        new S39();
      }
      if (x3 > 0) {
        send("msg15");
        try {
          new S81();
          new S90();
          new S42();
        } catch (IOException e) {
          send("msg9");
          new S60();
          new S13();
          new S9();
        } catch (IOException e) {
          new S74();
          send("msg11");
          send("msg12");
          new S1();
        }
        new S56();
        log("note");
      } else {
        new S83();
        new State();
      }
      if (x6 > 0) {
        switch (event) {
          case EV801:
            new S39();
            new S72();
            new Helper();
            break;
          case EV802:
            log("note");
            new S56();
            break;
        }
      } else {
        new S88();
        send("msg11");
      }
    } else {
      if (x6 > 0) {
        send("msg2");
      } else {
        if (x2 > 0) {
          new S58();
          new S47();
          new S91();
          send("msg18");
        }
        new S14();
      }
    }
  }
  public void pause() {
    send("msg12");
    send("msg4");
    new S44();
  }
}
